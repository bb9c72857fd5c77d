#include "ordercalc/braid.hpp"

#include <algorithm>

namespace ordercalc {

namespace {

void require_braid(const Word& w, const char* op) {
  if (w.tag().kind != GroupKind::Braid)
    throw std::invalid_argument(std::string(op) + " requires a braid word");
}

// Leftmost handle: smallest start p whose handle is permitted. For a start
// (i, e) at p the handle, if any, ends at the first later letter of index
// <= i, which must be sigma_i^{-e}. Permitted <=> the sigma_{i+1} letters
// strictly inside all share one sign.
struct HandlePos {
  std::size_t begin = 0;
  std::size_t end = 0;  // inclusive
  bool found = false;
};

HandlePos find_leftmost_permitted_handle(const std::vector<Letter>& buf) {
  const std::size_t n = buf.size();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const int i = buf[p].index;
    const int e = buf[p].sign;
    std::size_t q = p + 1;
    bool mixed_inner = false;
    int inner_sign = 0;  // sign of sigma_{i+1} letters seen so far
    while (q < n && buf[q].index > i) {
      if (buf[q].index == i + 1) {
        if (inner_sign == 0)
          inner_sign = buf[q].sign;
        else if (inner_sign != buf[q].sign)
          mixed_inner = true;
      }
      ++q;
    }
    if (q == n || buf[q].index < i || buf[q].sign == e) continue;
    if (mixed_inner) continue;  // interior sigma_{i+1}-handle must go first
    return HandlePos{p, q, true};
  }
  return {};
}

}  // namespace

Word handle_reduce(const Word& w, long long max_steps) {
  require_braid(w, "handle_reduce");
  std::vector<Letter> buf = w.letters();
  long long steps = 0;
  for (;;) {
    const HandlePos h = find_leftmost_permitted_handle(buf);
    if (!h.found) break;
    if (++steps > max_steps)
      throw BudgetExceededError("handle reduction exceeded " + std::to_string(max_steps) +
                                " steps on " + w.str());
    const int i = buf[h.begin].index;
    const int e = buf[h.begin].sign;
    std::vector<Letter> next;
    next.reserve(buf.size() + 2 * (h.end - h.begin));
    next.insert(next.end(), buf.begin(), buf.begin() + static_cast<long>(h.begin));
    for (std::size_t k = h.begin + 1; k < h.end; ++k) {
      const Letter& l = buf[k];
      if (l.index == i + 1) {
        next.push_back(Letter{i + 1, -e});
        next.push_back(Letter{i, l.sign});
        next.push_back(Letter{i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), buf.begin() + static_cast<long>(h.end) + 1, buf.end());
    detail::free_reduce(next);
    buf = std::move(next);
  }
  return Word(w.tag(), std::move(buf));
}

SigmaClass sigma_classify(const Word& w, long long max_steps) {
  require_braid(w, "sigma_classify");
  SigmaClass out;
  out.reduced = handle_reduce(w, max_steps);
  if (out.reduced.is_identity()) {
    out.kind = SigmaClass::Kind::Trivial;
    out.index = 0;
    return out;
  }
  int main_index = out.reduced.letters().front().index;
  for (const Letter& l : out.reduced.letters()) main_index = std::min(main_index, l.index);
  int sign = 0;
  for (const Letter& l : out.reduced.letters()) {
    if (l.index != main_index) continue;
    if (sign == 0) sign = l.sign;
    if (sign != l.sign)
      throw std::logic_error("handle-free word with mixed main-index signs: " +
                             out.reduced.str());
  }
  out.kind = sign > 0 ? SigmaClass::Kind::IPositive : SigmaClass::Kind::INegative;
  out.index = main_index;
  return out;
}

bool dehornoy_positive(const Word& w) {
  return sigma_classify(w).kind == SigmaClass::Kind::IPositive;
}

bool dd_positive(const Word& w) {
  const SigmaClass c = sigma_classify(w);
  if (c.kind == SigmaClass::Kind::Trivial) return false;
  const bool odd = c.index % 2 == 1;
  return c.kind == SigmaClass::Kind::IPositive ? odd : !odd;
}

LaurentPoly LaurentPoly::constant(long long c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(long long c, int degree) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[degree] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long long LaurentPoly::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [deg, c] : o.coeffs_) {
    long long v = out.coeffs_[deg] + c;
    if (v == 0)
      out.coeffs_.erase(deg);
    else
      out.coeffs_[deg] = v;
  }
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [da, ca] : coeffs_)
    for (const auto& [db, cb] : o.coeffs_) {
      long long v = out.coeffs_[da + db] + ca * cb;
      if (v == 0)
        out.coeffs_.erase(da + db);
      else
        out.coeffs_[da + db] = v;
    }
  return out;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : coeffs_) {
    if (!out.empty()) out += c >= 0 ? "+" : "";
    out += std::to_string(c);
    if (deg != 0) out += "t^" + std::to_string(deg);
  }
  return out;
}

BurauMatrix BurauMatrix::identity() {
  return BurauMatrix{LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
                     LaurentPoly::constant(1)};
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
  return BurauMatrix{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                     m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

bool BurauMatrix::is_identity() const {
  return m00.is_one() && m11.is_one() && m01.is_zero() && m10.is_zero();
}

namespace {

// Reduced Burau for B_3:
//   s1 -> [-t 1; 0 1]      s1^{-1} -> [-t^{-1} t^{-1}; 0 1]
//   s2 -> [1 0; t -t]      s2^{-1} -> [1 0; 1 -t^{-1}]
BurauMatrix burau_letter(const Letter& l) {
  const LaurentPoly zero;
  const LaurentPoly one = LaurentPoly::constant(1);
  if (l.index == 1) {
    if (l.sign > 0)
      return BurauMatrix{LaurentPoly::monomial(-1, 1), one, zero, one};
    return BurauMatrix{LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1), zero, one};
  }
  if (l.sign > 0)
    return BurauMatrix{one, zero, LaurentPoly::monomial(1, 1), LaurentPoly::monomial(-1, 1)};
  return BurauMatrix{one, zero, one, LaurentPoly::monomial(-1, -1)};
}

}  // namespace

BurauMatrix burau_matrix(const Word& w) {
  if (w.tag().kind != GroupKind::Braid || w.tag().strands != 3)
    throw std::invalid_argument("burau_matrix is only defined for braid:3 words");
  BurauMatrix acc = BurauMatrix::identity();
  for (const Letter& l : w.letters()) acc = acc * burau_letter(l);
  return acc;
}

bool burau_trivial(const Word& w) { return burau_matrix(w).is_identity(); }

IdentityOracle braid_identity_oracle(const GroupTag& tag) {
  if (tag.kind != GroupKind::Braid)
    throw std::invalid_argument("braid_identity_oracle requires a braid tag");
  if (tag.strands == 3) return [](const Word& w) { return burau_trivial(w); };
  return [](const Word& w) {
    return sigma_classify(w).kind == SigmaClass::Kind::Trivial;
  };
}

IdentityOracle default_identity_oracle(const GroupTag& tag) {
  if (tag.kind == GroupKind::Braid) return braid_identity_oracle(tag);
  return {};
}

}  // namespace ordercalc
