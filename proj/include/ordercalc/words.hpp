#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordercalc {

enum class GroupKind { Braid, Free2, Klein };

/// Identifies the ambient group a word lives in. Braid groups carry their
/// strand count; the free group F2 and the Klein bottle group are fixed.
struct GroupTag {
  GroupKind kind = GroupKind::Free2;
  int strands = 0;  // braid groups only, >= 2

  static GroupTag braid(int n);
  static GroupTag free2() { return GroupTag{GroupKind::Free2, 0}; }
  static GroupTag klein() { return GroupTag{GroupKind::Klein, 0}; }

  int generator_count() const;
  std::string name() const;  // "braid:3", "free2", "klein"

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

GroupTag parse_group_tag(const std::string& name);

/// One generator or inverse generator. For braids the index is the strand
/// index of sigma_i; for free2 the generators are x (1) and y (2); for the
/// Klein bottle group a (1) and b (2).
struct Letter {
  int index = 1;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

std::string letter_token(const GroupTag& tag, const Letter& l);

/// Freely reduced word. The empty word is the group identity and prints as
/// "1". Instances are immutable; all operations return new words.
class Word {
 public:
  explicit Word(GroupTag tag) : tag_(tag) {}
  Word(GroupTag tag, std::vector<Letter> letters);

  static Word identity(GroupTag tag) { return Word(tag); }
  static Word parse(const std::string& text, const GroupTag& tag);

  const GroupTag& tag() const { return tag_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  std::string str() const;

  Word inverse() const;
  Word pow(long long k) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  GroupTag tag_;
  std::vector<Letter> letters_;
};

/// h * w * h^{-1}
Word conjugate(const Word& w, const Word& h);

/// Canonical word order: length first, then lexicographic on printed tokens.
int canonical_compare(const Word& a, const Word& b);

struct WordCanonicalLess {
  bool operator()(const Word& a, const Word& b) const {
    return canonical_compare(a, b) < 0;
  }
};

/// Unique normal form a^m b^n for the Klein bottle group, which satisfies
/// b a b^{-1} = a^{-1}; hence (m,n)*(p,q) = (m + (-1)^n p, n + q).
struct KleinNormalForm {
  long long m = 0;
  long long n = 0;

  friend bool operator==(const KleinNormalForm&, const KleinNormalForm&) = default;
};

KleinNormalForm klein_normal_form(const Word& w);
KleinNormalForm klein_multiply(const KleinNormalForm& a, const KleinNormalForm& b);
KleinNormalForm klein_power(const KleinNormalForm& a, long long k);

namespace detail {
// In-place free reduction; used by Word's constructor and handle reduction.
void free_reduce(std::vector<Letter>& letters);
void validate_letters(const GroupTag& tag, const std::vector<Letter>& letters);
}  // namespace detail

}  // namespace ordercalc
