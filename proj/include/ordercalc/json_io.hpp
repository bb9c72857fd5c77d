#pragma once

#include <nlohmann/json.hpp>

#include "ordercalc/conradian.hpp"
#include "ordercalc/crossings.hpp"
#include "ordercalc/order_space.hpp"

namespace ordercalc {

// All serializers emit keys in a fixed (insertion) order so documents are
// byte-stable across runs.

ordered_json candidate_to_json(const CrossingCandidate& c);
ordered_json candidate_to_json(const ReinforcedCandidate& c);
ordered_json candidate_to_json(const DoubleCrossingCandidate& c);
CrossingCandidate candidate_from_json(const nlohmann::json& j, const GroupTag& tag);

ordered_json report_to_json(const VerificationReport& r);
ordered_json witness_pair_to_json(const WitnessPair& p);
ordered_json fingerprint_to_json(const BallFingerprint& fp);
ordered_json orbit_to_json(const OrbitReport& report);
ordered_json soul_to_json(const SoulApproximation& soul);
ordered_json experiment_to_json(const ExperimentReport& report);

}  // namespace ordercalc
