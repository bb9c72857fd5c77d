#include "ordercalc/ordering.hpp"

#include <stdexcept>

#include "ordercalc/braid.hpp"

namespace ordercalc {

char sign_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

Sign Ordering::sign(const Word& w) const {
  if (!(w.tag() == tag_))
    throw std::invalid_argument("word tag " + w.tag().name() + " does not match ordering on " +
                                tag_.name());
  if (w.is_identity()) return Sign::Zero;
  return sign_impl(w);
}

Sign is_positive(const OrderingHandle& ord, const Word& w) { return ord->sign(w); }

Sign compare(const OrderingHandle& ord, const Word& u, const Word& v) {
  return ord->sign(u.inverse() * v);
}

Sign SignEvaluator::sign(const Word& w) const {
  if (w.is_identity()) return Sign::Zero;
  const std::string key = w.str();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const Sign s = ord_->sign(w);
  cache_.emplace(std::move(key), s);
  return s;
}

namespace {

class DehornoyOrdering final : public Ordering {
 public:
  explicit DehornoyOrdering(int strands) : Ordering(GroupTag::braid(strands)) {}
  std::string designator() const override {
    return "dehornoy:" + std::to_string(tag().strands);
  }

 protected:
  Sign sign_impl(const Word& w) const override {
    return dehornoy_positive(w) ? Sign::Positive : Sign::Negative;
  }
};

class DDOrdering final : public Ordering {
 public:
  explicit DDOrdering(int strands) : Ordering(GroupTag::braid(strands)) {}
  std::string designator() const override { return "dd:" + std::to_string(tag().strands); }

 protected:
  Sign sign_impl(const Word& w) const override {
    return dd_positive(w) ? Sign::Positive : Sign::Negative;
  }
};

class ExoticCOrdering final : public Ordering {
 public:
  ExoticCOrdering() : Ordering(GroupTag::free2()) {}
  std::string designator() const override { return "exoticC"; }

 protected:
  Sign sign_impl(const Word& w) const override {
    return dd_positive(embed_free2_in_braid3(w)) ? Sign::Positive : Sign::Negative;
  }
};

class KleinConeOrdering final : public Ordering {
 public:
  KleinConeOrdering(int eps_a, int eps_b)
      : Ordering(GroupTag::klein()), eps_a_(eps_a), eps_b_(eps_b) {
    if ((eps_a != 1 && eps_a != -1) || (eps_b != 1 && eps_b != -1))
      throw std::invalid_argument("klein cone signs must be +1 or -1");
  }
  std::string designator() const override {
    return std::string("klein:") + (eps_a_ > 0 ? '+' : '-') + (eps_b_ > 0 ? '+' : '-');
  }

 protected:
  Sign sign_impl(const Word& w) const override {
    const KleinNormalForm nf = klein_normal_form(w);
    if (nf.n != 0) return nf.n * eps_b_ > 0 ? Sign::Positive : Sign::Negative;
    if (nf.m != 0) return nf.m * eps_a_ > 0 ? Sign::Positive : Sign::Negative;
    return Sign::Zero;
  }

 private:
  int eps_a_;
  int eps_b_;
};

class ConjugateOrdering final : public Ordering {
 public:
  ConjugateOrdering(OrderingHandle base, Word h)
      : Ordering(base->tag()), base_(std::move(base)), h_(std::move(h)) {
    if (!(h_.tag() == tag()))
      throw std::invalid_argument("conjugator tag does not match ordering group");
  }
  std::string designator() const override {
    return "conj(" + base_->designator() + "," + h_.str() + ")";
  }

 protected:
  Sign sign_impl(const Word& w) const override { return base_->sign(conjugate(w, h_)); }

 private:
  OrderingHandle base_;
  Word h_;
};

class ConvexExtensionOrdering final : public Ordering {
 public:
  ConvexExtensionOrdering(OrderingHandle outer, SubgroupPredicate membership,
                          OrderingHandle inner)
      : Ordering(outer->tag()),
        outer_(std::move(outer)),
        membership_(std::move(membership)),
        inner_(std::move(inner)) {
    if (!(inner_->tag() == tag()))
      throw std::invalid_argument("inner ordering group does not match outer");
    if (!(membership_.tag == tag()))
      throw std::invalid_argument("subgroup predicate group does not match ordering");
  }
  std::string designator() const override {
    return "ext(" + outer_->designator() + "," + membership_.name + "," +
           inner_->designator() + ")";
  }

 protected:
  Sign sign_impl(const Word& w) const override {
    return membership_.contains(w) ? inner_->sign(w) : outer_->sign(w);
  }

 private:
  OrderingHandle outer_;
  SubgroupPredicate membership_;
  OrderingHandle inner_;
};

}  // namespace

SubgroupPredicate gen_y_subgroup() {
  return SubgroupPredicate{"gen-y", GroupTag::free2(), [](const Word& w) {
                             for (const Letter& l : w.letters())
                               if (l.index != 2) return false;
                             return true;
                           }};
}

SubgroupPredicate gen_a_subgroup() {
  return SubgroupPredicate{"gen-a", GroupTag::klein(),
                           [](const Word& w) { return klein_normal_form(w).n == 0; }};
}

SubgroupPredicate whole_group(const GroupTag& tag) {
  return SubgroupPredicate{"all", tag, [](const Word&) { return true; }};
}

SubgroupPredicate parse_subgroup(const std::string& name, const GroupTag& tag) {
  if (name == "gen-y") return gen_y_subgroup();
  if (name == "gen-a") return gen_a_subgroup();
  if (name == "all") return whole_group(tag);
  throw std::invalid_argument("unknown subgroup designator: " + name);
}

OrderingHandle dehornoy_ordering(int strands) {
  return std::make_shared<DehornoyOrdering>(strands);
}

OrderingHandle dd_ordering(int strands) { return std::make_shared<DDOrdering>(strands); }

OrderingHandle exotic_c_ordering() { return std::make_shared<ExoticCOrdering>(); }

OrderingHandle klein_cone(int eps_a, int eps_b) {
  return std::make_shared<KleinConeOrdering>(eps_a, eps_b);
}

OrderingHandle conjugate_ordering(const OrderingHandle& base, const Word& h) {
  return std::make_shared<ConjugateOrdering>(base, h);
}

OrderingHandle convex_extension(const OrderingHandle& outer, SubgroupPredicate membership,
                                const OrderingHandle& inner) {
  return std::make_shared<ConvexExtensionOrdering>(outer, std::move(membership), inner);
}

Word embed_free2_in_braid3(const Word& w) {
  if (w.tag().kind != GroupKind::Free2)
    throw std::invalid_argument("embed_free2_in_braid3 requires a free2 word");
  std::vector<Letter> letters;
  letters.reserve(2 * w.letters().size());
  for (const Letter& l : w.letters()) {
    letters.push_back(Letter{l.index, l.sign});
    letters.push_back(Letter{l.index, l.sign});
  }
  return Word(GroupTag::braid(3), std::move(letters));
}

namespace {

// Splits "a,b,c" at top-level commas (parentheses nest).
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

OrderingHandle parse_ordering(const std::string& designator) {
  const std::string d = trim(designator);
  if (d == "exoticC") return exotic_c_ordering();
  if (d.rfind("dehornoy:", 0) == 0) return dehornoy_ordering(std::stoi(d.substr(9)));
  if (d.rfind("dd:", 0) == 0) return dd_ordering(std::stoi(d.substr(3)));
  if (d.rfind("klein:", 0) == 0) {
    const std::string signs = d.substr(6);
    if (signs.size() != 2 || (signs[0] != '+' && signs[0] != '-') ||
        (signs[1] != '+' && signs[1] != '-'))
      throw std::invalid_argument("klein designator needs two signs, e.g. klein:+-");
    return klein_cone(signs[0] == '+' ? 1 : -1, signs[1] == '+' ? 1 : -1);
  }
  if (d.rfind("conj(", 0) == 0 && d.back() == ')') {
    const auto args = split_args(d.substr(5, d.size() - 6));
    if (args.size() != 2) throw std::invalid_argument("conj(...) needs 2 arguments");
    OrderingHandle base = parse_ordering(args[0]);
    return conjugate_ordering(base, Word::parse(trim(args[1]), base->tag()));
  }
  if (d.rfind("ext(", 0) == 0 && d.back() == ')') {
    const auto args = split_args(d.substr(4, d.size() - 5));
    if (args.size() != 3) throw std::invalid_argument("ext(...) needs 3 arguments");
    OrderingHandle outer = parse_ordering(args[0]);
    OrderingHandle inner = parse_ordering(args[2]);
    return convex_extension(outer, parse_subgroup(trim(args[1]), outer->tag()), inner);
  }
  throw std::invalid_argument("unknown ordering designator: " + designator);
}

}  // namespace ordercalc
