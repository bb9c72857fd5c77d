#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

#include "ordercalc/words.hpp"

namespace ordercalc {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
char sign_char(Sign s);            // '-', '0', '+'
std::string sign_name(Sign s);     // "negative", "zero", "positive"

/// A left-invariant total order presented through its positive cone:
/// sign(w) decides w against the identity, and compare(u, v) is the sign of
/// u^{-1} v. Implementations are immutable and evaluation is pure.
class Ordering {
 public:
  virtual ~Ordering() = default;

  const GroupTag& tag() const { return tag_; }
  Sign sign(const Word& w) const;
  virtual std::string designator() const = 0;

 protected:
  explicit Ordering(GroupTag tag) : tag_(tag) {}
  virtual Sign sign_impl(const Word& w) const = 0;

 private:
  GroupTag tag_;
};

using OrderingHandle = std::shared_ptr<const Ordering>;

/// Sign of a single word against the identity.
Sign is_positive(const OrderingHandle& ord, const Word& w);

/// Sign of u^{-1} v: Positive means u precedes v.
Sign compare(const OrderingHandle& ord, const Word& u, const Word& v);

/// Decidable subgroup used by convex extensions and convexity checks.
struct SubgroupPredicate {
  std::string name;
  GroupTag tag;
  std::function<bool(const Word&)> contains;
};

SubgroupPredicate gen_y_subgroup();              // <y> in free2
SubgroupPredicate gen_a_subgroup();              // <a> in klein
SubgroupPredicate whole_group(const GroupTag&);  // everything
SubgroupPredicate parse_subgroup(const std::string& name, const GroupTag& tag);

OrderingHandle dehornoy_ordering(int strands);
OrderingHandle dd_ordering(int strands);
/// Restriction of the B_3 Dubrovina-Dubrovin order to the free subgroup
/// generated by s1^2 (= x) and s2^2 (= y); takes free2 words.
OrderingHandle exotic_c_ordering();
/// One of the four Klein bottle group orders: positive iff n*eps_b > 0, or
/// n = 0 and m*eps_a > 0, for the normal form a^m b^n.
OrderingHandle klein_cone(int eps_a, int eps_b);
/// Positive on g iff base is positive on h g h^{-1}.
OrderingHandle conjugate_ordering(const OrderingHandle& base, const Word& h);
/// Positivity dispatches on membership: inner on the subgroup, outer off it.
/// The caller owns the (only boundedly checkable) convexity claim.
OrderingHandle convex_extension(const OrderingHandle& outer, SubgroupPredicate membership,
                                const OrderingHandle& inner);

/// x -> s1^2, y -> s2^2.
Word embed_free2_in_braid3(const Word& w);

/// Memoizing front end over an ordering. One instance per thread of use.
class SignEvaluator {
 public:
  explicit SignEvaluator(OrderingHandle ord) : ord_(std::move(ord)) {}

  Sign sign(const Word& w) const;
  Sign compare(const Word& u, const Word& v) const { return sign(u.inverse() * v); }
  bool less(const Word& u, const Word& v) const { return compare(u, v) == Sign::Positive; }
  const OrderingHandle& ordering() const { return ord_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  OrderingHandle ord_;
  mutable std::unordered_map<std::string, Sign> cache_;
};

/// CLI designators: dehornoy:N, dd:N, exoticC, klein:[+-][+-],
/// conj(<handle>,<word>), ext(<handle>,<subgroup>,<handle>) with
/// <subgroup> in {gen-y, gen-a, all}.
OrderingHandle parse_ordering(const std::string& designator);

}  // namespace ordercalc
