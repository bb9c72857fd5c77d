// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ordercalc/ball.hpp"
#include "ordercalc/braid.hpp"
#include "ordercalc/conradian.hpp"
#include "ordercalc/crossings.hpp"
#include "ordercalc/json_io.hpp"
#include "ordercalc/order_space.hpp"

using namespace ordercalc;

namespace {

const GroupTag kB3 = GroupTag::braid(3);
const GroupTag kF2 = GroupTag::free2();

Word wf(const std::string& s) { return Word::parse(s, kF2); }

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& detail, const std::string& message) {
  if (!ok && detail.empty()) detail = message;
  return ok;
}

// 1. Handle-reduction triviality == Burau triviality over all 4^7 words.
bool criterion_word_problem(std::string& detail) {
  const Letter alpha[4] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  long long checked = 0;
  for (int len = 0; len <= 7; ++len) {
    std::vector<int> digits(len, 0);
    for (;;) {
      std::vector<Letter> letters;
      letters.reserve(len);
      for (int d : digits) letters.push_back(alpha[d]);
      const Word w(kB3, std::move(letters));
      const bool by_handles = sigma_classify(w).kind == SigmaClass::Kind::Trivial;
      if (by_handles != burau_trivial(w)) {
        detail = "mismatch on " + w.str();
        return false;
      }
      ++checked;
      int i = 0;
      while (i < len && ++digits[i] == 4) digits[i++] = 0;
      if (i == len) break;
    }
  }
  detail = std::to_string(checked) + " words, 0 mismatches";
  return true;
}

// 2. Trichotomy, transitivity, cone closure for the seven builtin handles.
bool criterion_order_axioms(std::string& detail) {
  const std::vector<OrderingHandle> handles = {
      dehornoy_ordering(3), dd_ordering(3),    exotic_c_ordering(), klein_cone(1, 1),
      klein_cone(1, -1),    klein_cone(-1, 1), klein_cone(-1, -1)};
  for (const auto& ord : handles) {
    SignEvaluator ev(ord);
    const auto b3 = enumerate_ball(ord->tag(), 3, default_identity_oracle(ord->tag()));
    const auto b2 = enumerate_ball(ord->tag(), 2, default_identity_oracle(ord->tag()));
    const std::string name = ord->designator();

    for (const Word& w : b3) {
      const Sign s = ev.sign(w);
      if (w.is_identity() ? s != Sign::Zero : s == Sign::Zero)
        return check(false, detail, name + ": trichotomy fails at " + w.str());
      if (ev.sign(w.inverse()) != negate(s))
        return check(false, detail, name + ": antisymmetry fails at " + w.str());
    }
    for (const Word& u : b2)
      for (const Word& v : b2) {
        if (ev.compare(u, v) != Sign::Positive) continue;
        for (const Word& t : b2)
          if (ev.compare(v, t) == Sign::Positive && ev.compare(u, t) != Sign::Positive)
            return check(false, detail, name + ": transitivity fails");
      }
    for (const Word& a : b3) {
      if (ev.sign(a) != Sign::Positive) continue;
      for (const Word& b : b3) {
        if (ev.sign(b) != Sign::Positive) continue;
        if (ev.sign(a * b) != Sign::Positive)
          return check(false, detail,
                       name + ": cone not closed at " + a.str() + " * " + b.str());
      }
    }
  }
  detail = "7 handles";
  return true;
}

// 3. y^-1 is least positive on the radius-3 ball of the exotic ordering.
bool criterion_least_positive(std::string& detail) {
  const OrderingHandle ord = exotic_c_ordering();
  SignEvaluator ev(ord);
  const Word least = wf("Y");
  int positives = 0;
  for (const Word& g : enumerate_ball(kF2, 3)) {
    if (ev.sign(g) != Sign::Positive) continue;
    ++positives;
    const Sign c = ev.compare(least, g);
    if (c == Sign::Negative) {
      detail = g.str() + " is positive but below y^-1";
      return false;
    }
  }
  detail = std::to_string(positives) + " positives dominated by y^-1";
  return true;
}

// 4. witness -> crossing -> witness round trip at n_max = 25.
bool criterion_round_trip(std::string& detail) {
  const OrderingHandle ord = exotic_c_ordering();
  if (!nonconradian_witness_check(ord, wf("Y"), wf("x"), 25))
    return check(false, detail, "(y^-1, x) fails the witness check");
  const CrossingCandidate c = crossing_from_nonconradian(ord, wf("Y"), wf("x"));
  const VerificationReport rep = verify_crossing(ord, c, 25);
  if (rep.status != VerificationReport::Status::VerifiedUpTo)
    return check(false, detail, "forward candidate does not verify");
  const WitnessPair p = nonconradian_from_crossing(ord, c, 25);
  if (p.n_checked != 25) return check(false, detail, "defect inequalities not all checked");
  detail = "h = " + p.h.str() + ", h_bar = " + p.h_bar.str();
  return true;
}

// 5. Everything the search finds converts to an exact reinforced crossing.
bool criterion_reinforced_soundness(std::string& detail) {
  const OrderingHandle ord = exotic_c_ordering();
  const auto results = search_crossings(ord, SearchBounds{3, 4, 4, 10}, 20);
  if (results.empty()) return check(false, detail, "no crossing found");
  for (const auto& [cand, rep] : results) {
    if (!rep.ok()) return check(false, detail, "search returned a refuted candidate");
    if (verify_reinforced(ord, to_reinforced(cand)).status !=
        VerificationReport::Status::ExactVerified) {
      detail = "conversion failed for " + candidate_to_json(cand).dump();
      return false;
    }
  }
  detail = std::to_string(results.size()) + " crossings, all conversions exact";
  return true;
}

// 6. Conjugates re-enter U_{y^-1} only for conjugators in <y>.
bool criterion_rigidity(std::string& detail) {
  const ExperimentReport report = rigidity_experiment(3, 3);
  if (!report.pass) detail = report.fail_witness;
  else detail = std::to_string(report.evidence.size()) + " conjugators";
  return report.pass;
}

// 7. Every 1-positive element pushes x into a convex subgroup containing it.
bool criterion_convex_subgroup(std::string& detail) {
  const ExperimentReport report = convex_subgroup_experiment(3);
  if (!report.pass) detail = report.fail_witness;
  else detail = std::to_string(report.evidence.size()) + " elements checked";
  return report.pass;
}

// 8. Four distinct Klein fingerprints, Conradian at the stated bounds.
bool criterion_klein(std::string& detail) {
  const ExperimentReport report = klein_enumeration(5);
  if (!report.pass) {
    detail = report.fail_witness;
    return false;
  }
  detail = "4 = 2^2 orderings";
  return true;
}

// 9. Soul approximation: <y> retained, x and x^-1 excluded with replayable
// certificates.
bool criterion_soul(std::string& detail) {
  const OrderingHandle ord = exotic_c_ordering();
  const SearchBounds bounds{3, 4, 4, 10};
  const SoulApproximation soul = soul_approximation(ord, 2, bounds);

  const SubgroupPredicate gen_y = gen_y_subgroup();
  for (const Word& h : soul.retained)
    if (!gen_y.contains(h) && soul.excluded.count(h))
      return check(false, detail, "partition broken");
  for (int k : {-2, -1, 0, 1, 2}) {
    const Word yk = wf("y").pow(k);
    bool found = false;
    for (const Word& h : soul.retained) found = found || h == yk;
    if (!found) return check(false, detail, yk.str() + " not retained");
  }
  for (const std::string& target : {"x", "X"}) {
    const auto it = soul.excluded.find(wf(target));
    if (it == soul.excluded.end())
      return check(false, detail, target + " not excluded");
    const auto& [h, cert] = *it;
    if (!verify_crossing(ord, cert.candidate, bounds.n_max).ok())
      return check(false, detail, "certificate for " + target + " does not replay");
    const bool positive = is_positive(ord, h) == Sign::Positive;
    const bool placed = positive ? compare(ord, cert.candidate.w, h) == Sign::Positive
                                 : compare(ord, h, cert.candidate.w) == Sign::Positive;
    if (!placed) return check(false, detail, "certificate for " + target + " misplaced");
  }
  detail = std::to_string(soul.excluded.size()) + " excluded, " +
           std::to_string(soul.retained.size()) + " retained";
  return true;
}

// 10. The four sign predictions behind the conjugate-perturbation argument.
bool criterion_primero(std::string& detail) {
  const OrderingHandle ord = exotic_c_ordering();
  const CrossingCandidate base = crossing_from_nonconradian(ord, wf("Y"), wf("x"));
  const CrossingCandidate seed = transform_crossing(ord, base, ShiftWByF{1});
  const CrossingCandidate refined =
      refine_between(ord, seed, Word::identity(kF2), wf("xxx"), 25);
  const ExperimentReport report =
      primero_perturbation(ord, refined, {wf("xxx"), wf("xxxx")}, 20);
  if (!report.pass) detail = report.fail_witness;
  else detail = "all four sign predictions hold";
  return report.pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"word-problem oracle agreement (length <= 7)", criterion_word_problem},
      {"order axioms on small balls", criterion_order_axioms},
      {"least-positive certificate", criterion_least_positive},
      {"non-Conradian witness round trip", criterion_round_trip},
      {"reinforced conversion soundness", criterion_reinforced_soundness},
      {"conjugate rigidity of the exotic ordering", criterion_rigidity},
      {"convex-subgroup mechanism", criterion_convex_subgroup},
      {"klein cone enumeration", criterion_klein},
      {"soul approximation", criterion_soul},
      {"perturbation sign predictions", criterion_primero},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu. %s (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
