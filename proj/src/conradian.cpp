#include "ordercalc/conradian.hpp"

#include <future>
#include <stdexcept>

#include "ordercalc/ball.hpp"
#include "ordercalc/braid.hpp"

namespace ordercalc {

std::vector<std::pair<Word, Word>> n2_violations_over(const OrderingHandle& ord,
                                                      std::span<const Word> elements) {
  SignEvaluator ev(ord);
  std::vector<const Word*> positives;
  for (const Word& w : elements)
    if (ev.sign(w) == Sign::Positive) positives.push_back(&w);
  std::vector<std::pair<Word, Word>> out;
  for (const Word* f : positives)
    for (const Word* g : positives) {
      const Word fg2 = *f * g->pow(2);
      if (ev.less(fg2, *g)) out.emplace_back(*f, *g);
    }
  return out;
}

std::vector<std::pair<Word, Word>> n2_violations(const OrderingHandle& ord, int ball_radius) {
  const std::vector<Word> ball =
      enumerate_ball(ord->tag(), ball_radius, default_identity_oracle(ord->tag()));
  return n2_violations_over(ord, ball);
}

bool nonconradian_witness_check(const OrderingHandle& ord, const Word& f, const Word& g,
                                int n_max) {
  SignEvaluator ev(ord);
  if (ev.sign(f) != Sign::Positive || ev.sign(g) != Sign::Positive)
    throw std::invalid_argument("nonconradian_witness_check requires positive f and g");
  Word acc = f;
  for (int n = 1; n <= n_max; ++n) {
    acc = acc * g;  // f g^n
    if (!ev.less(acc, g)) return false;
  }
  return true;
}

bool convexity_check(const OrderingHandle& ord, const SubgroupPredicate& membership,
                     int ball_radius) {
  if (!(membership.tag == ord->tag()))
    throw std::invalid_argument("subgroup predicate group does not match ordering");
  SignEvaluator ev(ord);
  const std::vector<Word> ball =
      enumerate_ball(ord->tag(), ball_radius, default_identity_oracle(ord->tag()));
  std::vector<const Word*> inside_pos, outside_pos;
  for (const Word& w : ball) {
    if (ev.sign(w) != Sign::Positive) continue;
    (membership.contains(w) ? inside_pos : outside_pos).push_back(&w);
  }
  for (const Word* fbar : inside_pos)
    for (const Word* f : outside_pos)
      if (ev.less(*f, *fbar)) return false;  // 1 < f < fbar with f outside
  return true;
}

namespace {

struct SideResult {
  std::map<Word, SearchResult, WordCanonicalLess> certificates;
};

// One streaming pass per sign side; each target keeps the first candidate
// (canonical order) whose w lands past it, which matches the per-target
// constrained search because the constrained enumeration is a subsequence.
SideResult run_side(const OrderingHandle& ord, const SearchBounds& bounds,
                    const std::vector<Word>& targets, bool positive_side) {
  SideResult result;
  if (targets.empty()) return result;
  SignEvaluator ev(ord);
  SearchConstraints cons;
  if (positive_side)
    cons.require_u_nonnegative = true;
  else
    cons.require_v_nonpositive = true;
  std::size_t remaining = targets.size();
  search_crossings_stream(ev, bounds, cons, [&](const CrossingCandidate& c) {
    for (const Word& h : targets) {
      if (result.certificates.count(h)) continue;
      const bool excludes = positive_side ? ev.less(c.w, h) : ev.less(h, c.w);
      if (!excludes) continue;
      const VerificationReport rep = verify_crossing(ev, c, bounds.n_max);
      if (!rep.ok()) continue;
      result.certificates.emplace(h, SearchResult{c, rep});
      --remaining;
    }
    return remaining > 0;
  });
  return result;
}

}  // namespace

SoulApproximation soul_approximation(const OrderingHandle& ord, int radius,
                                     const SearchBounds& bounds, int threads) {
  SoulApproximation out;
  out.radius = radius;
  out.bounds = bounds;

  SignEvaluator ev(ord);
  const std::vector<Word> ball =
      enumerate_ball(ord->tag(), radius, default_identity_oracle(ord->tag()));
  std::vector<Word> positives, negatives;
  for (const Word& h : ball) {
    const Sign s = ev.sign(h);
    if (s == Sign::Positive) positives.push_back(h);
    if (s == Sign::Negative) negatives.push_back(h);
  }

  SideResult pos_side, neg_side;
  if (threads > 1) {
    auto fut = std::async(std::launch::async, run_side, ord, bounds, negatives, false);
    pos_side = run_side(ord, bounds, positives, true);
    neg_side = fut.get();
  } else {
    pos_side = run_side(ord, bounds, positives, true);
    neg_side = run_side(ord, bounds, negatives, false);
  }

  for (auto& [h, cert] : pos_side.certificates) out.excluded.emplace(h, cert);
  for (auto& [h, cert] : neg_side.certificates) out.excluded.emplace(h, cert);
  for (const Word& h : ball)
    if (!out.excluded.count(h)) out.retained.push_back(h);
  return out;
}

}  // namespace ordercalc
