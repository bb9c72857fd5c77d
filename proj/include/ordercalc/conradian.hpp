#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ordercalc/crossings.hpp"
#include "ordercalc/ordering.hpp"

namespace ordercalc {

/// Positive pairs (f, g) in the ball with f g^2 < g, i.e. failures of the
/// n = 2 Conradian test, in canonical pair order. Empty means the bounded
/// test passes on this ball.
std::vector<std::pair<Word, Word>> n2_violations(const OrderingHandle& ord, int ball_radius);
std::vector<std::pair<Word, Word>> n2_violations_over(const OrderingHandle& ord,
                                                      std::span<const Word> elements);

/// True iff f g^n < g for all 1 <= n <= n_max. Requires f, g positive.
bool nonconradian_witness_check(const OrderingHandle& ord, const Word& f, const Word& g,
                                int n_max);

/// True iff the ball holds no pair (fbar in the subgroup, f outside) with
/// 1 < f < fbar, i.e. no bounded counterexample to convexity.
bool convexity_check(const OrderingHandle& ord, const SubgroupPredicate& membership,
                     int ball_radius);

/// Bounded approximation of the maximal convex Conradian subgroup. Excluded
/// elements carry a replayable crossing certificate; retained elements are
/// only a bounded negative (no certificate found within the bounds), which
/// reports must say.
struct SoulApproximation {
  int radius = 0;
  SearchBounds bounds;
  std::vector<Word> retained;  // canonical order, contains the identity
  std::map<Word, SearchResult, WordCanonicalLess> excluded;
};

/// For positive h, searches for a crossing with 1 <= u and w < h (so h is
/// above some crossing zone, violating membership); mirrored for negative h
/// with v <= 1 and h < w. threads > 1 runs the two sides concurrently.
SoulApproximation soul_approximation(const OrderingHandle& ord, int radius,
                                     const SearchBounds& bounds, int threads = 1);

}  // namespace ordercalc
