#include "ordercalc/json_io.hpp"

namespace ordercalc {

ordered_json candidate_to_json(const CrossingCandidate& c) {
  ordered_json j;
  j["f"] = c.f.str();
  j["g"] = c.g.str();
  j["u"] = c.u.str();
  j["v"] = c.v.str();
  j["w"] = c.w.str();
  j["M"] = c.M;
  j["N"] = c.N;
  return j;
}

ordered_json candidate_to_json(const ReinforcedCandidate& c) {
  ordered_json j;
  j["f"] = c.f.str();
  j["g"] = c.g.str();
  j["u"] = c.u.str();
  j["v"] = c.v.str();
  j["w"] = c.w.str();
  j["M"] = c.M;
  j["N"] = c.N;
  return j;
}

ordered_json candidate_to_json(const DoubleCrossingCandidate& c) {
  ordered_json j;
  j["f"] = c.f.str();
  j["g"] = c.g.str();
  j["u"] = c.u.str();
  j["v"] = c.v.str();
  j["w1"] = c.w1.str();
  j["w2"] = c.w2.str();
  return j;
}

CrossingCandidate candidate_from_json(const nlohmann::json& j, const GroupTag& tag) {
  auto word = [&](const char* key) {
    return Word::parse(j.at(key).get<std::string>(), tag);
  };
  return CrossingCandidate(word("f"), word("g"), word("u"), word("v"), word("w"),
                           j.at("M").get<int>(), j.at("N").get<int>());
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  switch (r.status) {
    case VerificationReport::Status::ExactVerified:
      j["status"] = "exact_verified";
      break;
    case VerificationReport::Status::VerifiedUpTo:
      j["status"] = "verified_up_to";
      j["n"] = r.n_max;
      break;
    case VerificationReport::Status::Refuted:
      j["status"] = "refuted";
      j["condition"] = r.refutation->condition;
      if (r.refutation->witness_n)
        j["witness"] = *r.refutation->witness_n;
      else
        j["witness"] = r.refutation->comparison;
      break;
  }
  return j;
}

ordered_json witness_pair_to_json(const WitnessPair& p) {
  ordered_json j;
  j["h"] = p.h.str();
  j["h_bar"] = p.h_bar.str();
  j["n_checked"] = p.n_checked;
  return j;
}

ordered_json fingerprint_to_json(const BallFingerprint& fp) {
  ordered_json j;
  j["group"] = fp.tag().name();
  j["radius"] = fp.radius();
  ordered_json signs;
  for (const auto& [w, s] : fp.signs()) signs[w.str()] = std::string(1, sign_char(s));
  j["signs"] = std::move(signs);
  return j;
}

ordered_json orbit_to_json(const OrbitReport& report) {
  ordered_json j;
  j["distinct_fingerprints"] = report.distinct_count;
  ordered_json entries = ordered_json::array();
  for (const OrbitEntry& e : report.entries) {
    ordered_json row;
    row["conjugator"] = e.conjugator.str();
    row["fingerprint_class"] = e.fp_class;
    row["fingerprint"] = fingerprint_to_json(e.fp);
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json soul_to_json(const SoulApproximation& soul) {
  ordered_json j;
  j["radius"] = soul.radius;
  j["bounds"] = {{"ball_radius", soul.bounds.ball_radius},
                 {"max_m", soul.bounds.max_m},
                 {"max_n", soul.bounds.max_n},
                 {"n_max", soul.bounds.n_max}};
  ordered_json retained = ordered_json::array();
  for (const Word& w : soul.retained) retained.push_back(w.str());
  j["retained"] = std::move(retained);
  ordered_json excluded = ordered_json::array();
  for (const auto& [h, cert] : soul.excluded) {
    ordered_json row;
    row["element"] = h.str();
    row["certificate"] = candidate_to_json(cert.candidate);
    row["report"] = report_to_json(cert.report);
    excluded.push_back(std::move(row));
  }
  j["excluded"] = std::move(excluded);
  j["caveat"] = "retention is bounded evidence only: no certificate found within the bounds";
  return j;
}

ordered_json experiment_to_json(const ExperimentReport& report) {
  ordered_json j;
  j["experiment"] = report.experiment;
  j["params"] = report.params;
  j["verdict"] = report.pass ? "pass" : "fail";
  if (!report.pass) j["witness"] = report.fail_witness;
  j["evidence"] = report.evidence;
  return j;
}

}  // namespace ordercalc
