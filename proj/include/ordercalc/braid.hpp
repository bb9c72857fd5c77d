#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ordercalc/ball.hpp"
#include "ordercalc/words.hpp"

namespace ordercalc {

inline constexpr long long kDefaultHandleBudget = 1'000'000;

/// Raised when handle reduction exceeds its step budget. Reduction always
/// terminates, so hitting the budget signals an implementation bug rather
/// than a hard input.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dehornoy handle reduction. A sigma_i-handle is a subword
/// sigma_i^e v sigma_i^{-e} whose interior v uses only indices > i; it is
/// permitted when the sigma_{i+1} letters of v all carry one sign. The
/// leftmost permitted handle is rewritten (outer letters dropped, each
/// sigma_{i+1}^d replaced by sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e}),
/// the word freely reduced, and the scan restarted until no handle remains.
Word handle_reduce(const Word& w, long long max_steps = kDefaultHandleBudget);

struct SigmaClass {
  enum class Kind { Trivial, IPositive, INegative };
  Kind kind = Kind::Trivial;
  int index = 0;  // main generator index; 0 when trivial
  Word reduced;   // handle-free representative

  SigmaClass() : reduced(GroupTag::braid(2)) {}
};

SigmaClass sigma_classify(const Word& w, long long max_steps = kDefaultHandleBudget);

/// Membership in the Dehornoy cone P_D (i-positive for some i).
bool dehornoy_positive(const Word& w);

/// Membership in the Dubrovina-Dubrovin cone
/// P_1 u P_2^{-1} u ... u P_{n-1}^{(-1)^n}: i-positive for odd i or
/// i-negative for even i.
bool dd_positive(const Word& w);

/// Integer-coefficient Laurent polynomial in one variable t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c);
  static LaurentPoly monomial(long long c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  long long coeff(int degree) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str() const;

 private:
  std::map<int, long long> coeffs_;  // degree -> coefficient, zeros pruned
};

struct BurauMatrix {
  LaurentPoly m00, m01, m10, m11;

  static BurauMatrix identity();
  BurauMatrix operator*(const BurauMatrix& o) const;
  bool is_identity() const;
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

/// Reduced Burau matrix of a 3-strand braid word. Faithful on B_3, which
/// makes it an independent word-problem oracle there.
BurauMatrix burau_matrix(const Word& w);
bool burau_trivial(const Word& w);

/// Word-problem oracle for a braid tag: Burau for B_3, handle-reduction
/// triviality otherwise (not independently cross-checked for n > 3).
IdentityOracle braid_identity_oracle(const GroupTag& tag);

/// Canonical ball oracle for any tag, suitable for enumerate_ball.
IdentityOracle default_identity_oracle(const GroupTag& tag);

}  // namespace ordercalc
