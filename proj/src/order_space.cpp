#include "ordercalc/order_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordercalc/ball.hpp"
#include "ordercalc/braid.hpp"
#include "ordercalc/conradian.hpp"

namespace ordercalc {

BallFingerprint::BallFingerprint(GroupTag tag, int radius,
                                 std::vector<std::pair<Word, Sign>> signs)
    : tag_(tag), radius_(radius), signs_(std::move(signs)) {
  for (const auto& [w, s] : signs_)
    if (s == Sign::Zero)
      throw std::invalid_argument("fingerprint entries must be nonzero: " + w.str());
}

BallFingerprint BallFingerprint::restrict_to(int r) const {
  std::vector<std::pair<Word, Sign>> kept;
  for (const auto& e : signs_)
    if (e.first.length() <= r) kept.push_back(e);
  return BallFingerprint(tag_, r, std::move(kept));
}

BallFingerprint fingerprint(const OrderingHandle& ord, int radius) {
  const std::vector<Word> ball =
      enumerate_ball(ord->tag(), radius, default_identity_oracle(ord->tag()));
  SignEvaluator ev(ord);
  std::vector<std::pair<Word, Sign>> signs;
  signs.reserve(ball.size());
  for (const Word& w : ball) {
    if (w.is_identity()) continue;
    signs.emplace_back(w, ev.sign(w));
  }
  return BallFingerprint(ord->tag(), radius, std::move(signs));
}

bool in_U_f(const OrderingHandle& ord, const Word& f) {
  if (f.is_identity()) throw std::invalid_argument("U_f is only defined for f != 1");
  return ord->sign(f) == Sign::Positive;
}

int agreement_radius(const OrderingHandle& a, const OrderingHandle& b, int max_radius) {
  if (!(a->tag() == b->tag()))
    throw std::invalid_argument("agreement_radius requires orderings on one group");
  int r = 0;
  while (r < max_radius && fingerprint(a, r + 1) == fingerprint(b, r + 1)) ++r;
  return r;
}

OrbitReport conjugate_orbit_fingerprints(const OrderingHandle& ord, int conj_radius,
                                         int fp_radius) {
  const std::vector<Word> ball =
      enumerate_ball(ord->tag(), conj_radius, default_identity_oracle(ord->tag()));
  OrbitReport report;
  std::vector<BallFingerprint> distinct;
  for (const Word& h : ball) {
    BallFingerprint fp = fingerprint(conjugate_ordering(ord, h), fp_radius);
    int cls = -1;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (distinct[i] == fp) {
        cls = static_cast<int>(i);
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(distinct.size());
      distinct.push_back(fp);
    }
    report.entries.push_back(OrbitEntry{h, std::move(fp), cls});
  }
  report.distinct_count = static_cast<int>(distinct.size());
  return report;
}

namespace {

ordered_json comparison_row(const std::string& statement, bool holds) {
  ordered_json row;
  row["statement"] = statement;
  row["holds"] = holds;
  return row;
}

}  // namespace

ExperimentReport primero_perturbation(const OrderingHandle& ord, const CrossingCandidate& c,
                                      const std::vector<Word>& family, int n_max) {
  SignEvaluator ev(ord);
  const VerificationReport rep = verify_crossing(ev, c, n_max);
  if (!rep.ok())
    throw PreconditionError("primero_perturbation: crossing failed verification (" +
                            rep.refutation->comparison + ")");
  if (family.empty()) throw PreconditionError("primero_perturbation: family is empty");
  for (const Word& f : family)
    if (ev.sign(f) != Sign::Positive)
      throw PreconditionError("primero_perturbation: family member " + f.str() +
                              " is not positive");
  const Word* fmin = &family.front();
  for (const Word& f : family)
    if (ev.less(f, *fmin)) fmin = &f;
  if (ev.sign(c.u) != Sign::Positive)
    throw PreconditionError("primero_perturbation requires 1 < u");
  if (!ev.less(c.u, c.v)) throw PreconditionError("primero_perturbation requires u < v");
  if (!ev.less(c.v, *fmin))
    throw PreconditionError("primero_perturbation requires v below the family");

  const OrderingHandle by_vinv = conjugate_ordering(ord, c.v.inverse());
  const OrderingHandle by_winv = conjugate_ordering(ord, c.w.inverse());
  const Word t = c.g.pow(c.M) * c.f.pow(c.N);

  ExperimentReport report;
  report.experiment = "primero-perturbation";
  report.params = {{"ordering", ord->designator()},
                   {"family", ordered_json::array()},
                   {"n_max", n_max}};
  for (const Word& f : family) report.params["family"].push_back(f.str());
  report.evidence = ordered_json::array();
  report.pass = true;

  auto record = [&](const std::string& statement, bool holds) {
    report.evidence.push_back(comparison_row(statement, holds));
    if (!holds && report.pass) {
      report.pass = false;
      report.fail_witness = statement;
    }
  };

  for (const Word& f : family) {
    record("1 < " + f.str() + " under conj by v^-1", by_vinv->sign(f) == Sign::Positive);
    record("1 < " + f.str() + " under conj by w^-1", by_winv->sign(f) == Sign::Positive);
  }
  record("g^M f^N < 1 under conj by v^-1", by_vinv->sign(t) == Sign::Negative);
  record("g^M f^N > 1 under conj by w^-1", by_winv->sign(t) == Sign::Positive);
  return report;
}

ExperimentReport rigidity_experiment(int conj_radius, int check_radius) {
  const OrderingHandle exotic = exotic_c_ordering();
  const SubgroupPredicate gen_y = gen_y_subgroup();
  const Word y_inv = Word::parse("Y", GroupTag::free2());
  const BallFingerprint base_fp = fingerprint(exotic, check_radius);
  const std::vector<Word> ball = enumerate_ball(GroupTag::free2(), conj_radius);

  ExperimentReport report;
  report.experiment = "rigidity";
  report.params = {{"conj_radius", conj_radius}, {"check_radius", check_radius}};
  report.evidence = ordered_json::array();
  report.pass = true;

  for (const Word& beta : ball) {
    const OrderingHandle conj = conjugate_ordering(exotic, beta);
    const bool in_gen_y = gen_y.contains(beta);
    const bool y_inv_positive = conj->sign(y_inv) == Sign::Positive;
    bool fp_matches = true;
    if (in_gen_y) fp_matches = fingerprint(conj, check_radius) == base_fp;
    const bool row_ok = (y_inv_positive == in_gen_y) && (!in_gen_y || fp_matches);

    ordered_json row;
    row["beta"] = beta.str();
    row["in_gen_y"] = in_gen_y;
    row["y_inv_positive"] = y_inv_positive;
    if (in_gen_y) row["fingerprint_matches"] = fp_matches;
    report.evidence.push_back(row);
    if (!row_ok && report.pass) {
      report.pass = false;
      report.fail_witness = "beta = " + beta.str();
    }
  }
  return report;
}

ExperimentReport convex_subgroup_experiment(int radius) {
  const OrderingHandle exotic = exotic_c_ordering();
  SignEvaluator ev(exotic);
  const std::vector<Word> ball = enumerate_ball(GroupTag::free2(), radius);

  ExperimentReport report;
  report.experiment = "convex-subgroup";
  report.params = {{"radius", radius}};
  report.evidence = ordered_json::array();
  report.pass = true;

  for (const Word& beta : ball) {
    if (ev.sign(beta) != Sign::Positive) continue;
    const Word image = embed_free2_in_braid3(beta);
    const SigmaClass cls = sigma_classify(image);
    if (cls.kind != SigmaClass::Kind::IPositive || cls.index != 1) continue;

    // Leading s2 exponent of the handle-free 1-positive representative.
    long long k = 0;
    for (const Letter& l : cls.reduced.letters()) {
      if (l.index == 1) break;
      k += l.sign;
    }
    long long l_shift = 0;
    while (2 * l_shift + k <= 0) ++l_shift;

    const Word s2_2l = Word::parse("y", GroupTag::free2()).pow(l_shift);
    const Word shifted_image = embed_free2_in_braid3(s2_2l * beta);
    const Word s1_inv2(GroupTag::braid(3), {Letter{1, -1}, Letter{1, -1}});
    const bool holds = dd_positive(s1_inv2 * shifted_image);

    ordered_json row;
    row["beta"] = beta.str();
    row["k"] = k;
    row["l"] = l_shift;
    row["x_below_shifted"] = holds;
    report.evidence.push_back(row);
    if (!holds && report.pass) {
      report.pass = false;
      report.fail_witness = "beta = " + beta.str();
    }
  }
  return report;
}

ExperimentReport klein_enumeration(int radius) {
  ExperimentReport report;
  report.experiment = "klein-enumeration";
  report.params = {{"radius", radius}};
  report.evidence = ordered_json::array();
  report.pass = true;

  auto record = [&](const std::string& statement, bool holds) {
    report.evidence.push_back(comparison_row(statement, holds));
    if (!holds && report.pass) {
      report.pass = false;
      report.fail_witness = statement;
    }
  };

  const int eps[2] = {1, -1};
  std::vector<std::pair<std::string, OrderingHandle>> cones;
  for (int ea : eps)
    for (int eb : eps) cones.emplace_back("", klein_cone(ea, eb));
  for (auto& [name, cone] : cones) name = cone->designator();

  std::vector<BallFingerprint> fps;
  for (const auto& [name, cone] : cones) fps.push_back(fingerprint(cone, radius));
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      record("fingerprints differ: " + cones[i].first + " vs " + cones[j].first,
             !(fps[i] == fps[j]));

  const SearchBounds bounds{4, 3, 3, 10};
  for (const auto& [name, cone] : cones) {
    record("no n=2 violations on ball(4): " + name, n2_violations(cone, 4).empty());
    record("no crossing at (4, 3, 3, 10): " + name,
           search_crossings(cone, bounds, 1).empty());
  }

  ordered_json count_row;
  count_row["ordering_count"] = 4;
  count_row["power_of_two"] = "2^2";
  report.evidence.push_back(count_row);
  return report;
}

}  // namespace ordercalc
