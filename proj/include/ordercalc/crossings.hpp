#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordercalc/ordering.hpp"
#include "ordercalc/words.hpp"

namespace ordercalc {

/// Default bound for the per-exponent crossing condition checks.
inline constexpr int kDefaultConditionBound = 25;

/// The 5-tuple (f, g, u, v, w) with exponent witnesses M, N. A candidate is
/// pure data; whether it is an actual crossing is decided against an
/// ordering by verify_crossing. Neither f nor g may be the identity.
struct CrossingCandidate {
  Word f, g, u, v, w;
  int M = 1, N = 1;

  CrossingCandidate(Word f, Word g, Word u, Word v, Word w, int M, int N);
};

/// Same data as CrossingCandidate, but all conditions are single
/// comparisons, so verification needs no bound. f = 1 and g = 1 are
/// representable here; they simply fail verification.
struct ReinforcedCandidate {
  Word f, g, u, v, w;
  int M = 1, N = 1;

  ReinforcedCandidate(Word f, Word g, Word u, Word v, Word w, int M, int N);
};

struct DoubleCrossingCandidate {
  Word f, g, u, v, w1, w2;

  DoubleCrossingCandidate(Word f, Word g, Word u, Word v, Word w1, Word w2);
};

struct Refutation {
  int condition = 0;                    // 1: frame, 2: per-exponent, 3: witness pinch
  std::string comparison;               // the failing comparison
  std::optional<long long> witness_n;   // exponent for condition 2
};

struct VerificationReport {
  enum class Status { ExactVerified, VerifiedUpTo, Refuted };
  Status status = Status::ExactVerified;
  int n_max = 0;  // bound for VerifiedUpTo
  std::optional<Refutation> refutation;

  bool ok() const { return status != Status::Refuted; }

  static VerificationReport exact() { return {Status::ExactVerified, 0, std::nullopt}; }
  static VerificationReport up_to(int n) { return {Status::VerifiedUpTo, n, std::nullopt}; }
  static VerificationReport refuted(int condition, std::string comparison,
                                    std::optional<long long> n = std::nullopt) {
    return {Status::Refuted, 0, Refutation{condition, std::move(comparison), n}};
  }
};

/// Checks u < v, f^N v < w < g^M u, u < w < v, and g^n u < v, f^n v > u for
/// every |n| <= n_max. Requires n_max >= max(M, N).
VerificationReport verify_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                   int n_max);
VerificationReport verify_crossing(const SignEvaluator& ev, const CrossingCandidate& c,
                                   int n_max);

/// Checks u < w < v, f u > u, g v < v, f^N v < w < g^M u; fully decidable.
VerificationReport verify_reinforced(const OrderingHandle& ord, const ReinforcedCandidate& c);
VerificationReport verify_reinforced(const SignEvaluator& ev, const ReinforcedCandidate& c);

/// Checks u < w1 < w2 < v, g u > w1, g v < w2, f w2 < w1, f u > u, f v > v.
VerificationReport verify_double_crossing(const OrderingHandle& ord,
                                          const DoubleCrossingCandidate& c);
VerificationReport verify_double_crossing(const SignEvaluator& ev,
                                          const DoubleCrossingCandidate& c);

/// (f, g, u, v, w) -> (f^N g^M, g^M f^N, f^N w, g^M w, w), M and N copied.
ReinforcedCandidate to_reinforced(const CrossingCandidate& c);

/// Reads a reinforced candidate back as a crossing candidate (same fields).
CrossingCandidate as_crossing(const ReinforcedCandidate& c);

struct ShiftWByG { int n = 1; };                // w -> g^n w, M -> M + n
struct ShiftWByF { int n = 1; };                // w -> f^n w, N -> N + n
struct ExtendU { int n = 1; };                  // u -> f^{+-n} u, direction from compare
struct ExtendV { int n = 1; };                  // v -> g^{+-n} v, direction from compare
struct ConjugateMove { Word h; };               // (hfh^-1, hgh^-1, hu, hv, hw)
using CrossingMove = std::variant<ShiftWByG, ShiftWByF, ExtendU, ExtendV, ConjugateMove>;

CrossingCandidate transform_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                     const CrossingMove& move);

/// From positive f, g with f g^n < g: the crossing (f, g, 1, f^-1 g, g^2)
/// with N = 1, M = 3.
CrossingCandidate crossing_from_nonconradian(const OrderingHandle& ord, const Word& f,
                                             const Word& g);

/// From positive f, g with f g^2 < g: the crossing (f, fg, 1, fg, g) with
/// M = N = 2.
CrossingCandidate crossing_from_n2_violation(const OrderingHandle& ord, const Word& f,
                                             const Word& g);

/// h > 1, h_bar > 1 with h h_bar^n < h_bar for 1 <= n <= n_checked: a
/// bounded certificate that the ordering is not Conradian.
struct WitnessPair {
  Word h;
  Word h_bar;
  int n_checked = 0;
};

/// h = w^-1 g^M f^N w, h_bar = w^-1 g^M w; verifies positivity and the
/// defect inequality up to n_max. A defect failure on a verified crossing
/// signals a bug, not a refutation.
WitnessPair nonconradian_from_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                       int n_max);

/// Conjugates by f^N, then by the M-th power of the conjugated g, lowering
/// the v slot when compare says so; the result satisfies h1 < u' and
/// v' < h2 and verifies up to n_max - (M + N).
CrossingCandidate refine_between(const OrderingHandle& ord, const CrossingCandidate& c,
                                 const Word& h1, const Word& h2, int n_max);

struct SearchBounds {
  int ball_radius = 3;
  int max_m = 4;
  int max_n = 4;
  int n_max = kDefaultConditionBound;
};

/// Extra constraints pushed into the search enumerator (soul exclusion).
struct SearchConstraints {
  bool require_u_nonnegative = false;   // 1 <= u
  bool require_v_nonpositive = false;   // v <= 1
  std::optional<Word> w_below;          // w < *w_below
  std::optional<Word> w_above;          // *w_above < w
};

struct SearchResult {
  CrossingCandidate candidate;
  VerificationReport report;
};

/// Exhaustive search over ball(ball_radius)^5 with f, g != 1 and witnesses
/// M <= max_m, N <= max_n, in order (total length, (f,g,u,v,w) canonical,
/// M, N), stopping after `limit` verified candidates.
std::vector<SearchResult> search_crossings(const OrderingHandle& ord, const SearchBounds& bounds,
                                           int limit);

/// Streaming core: candidates arrive in canonical order and are guaranteed
/// to verify up to bounds.n_max; the sink returns false to stop early.
void search_crossings_stream(const SignEvaluator& ev, const SearchBounds& bounds,
                             const SearchConstraints& constraints,
                             const std::function<bool(const CrossingCandidate&)>& sink);

}  // namespace ordercalc
