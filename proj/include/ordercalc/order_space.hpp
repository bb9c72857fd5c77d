#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordercalc/crossings.hpp"
#include "ordercalc/ordering.hpp"

namespace ordercalc {

using ordered_json = nlohmann::ordered_json;

/// Sign vector of an ordering over a ball, excluding the identity: a finite
/// approximation of a point in the space of left orderings. Entries are in
/// canonical word order and never Zero.
class BallFingerprint {
 public:
  BallFingerprint(GroupTag tag, int radius, std::vector<std::pair<Word, Sign>> signs);

  const GroupTag& tag() const { return tag_; }
  int radius() const { return radius_; }
  const std::vector<std::pair<Word, Sign>>& signs() const { return signs_; }

  /// Entries of length <= r: the fingerprint this one extends.
  BallFingerprint restrict_to(int r) const;

  friend bool operator==(const BallFingerprint&, const BallFingerprint&) = default;

 private:
  GroupTag tag_;
  int radius_;
  std::vector<std::pair<Word, Sign>> signs_;
};

BallFingerprint fingerprint(const OrderingHandle& ord, int radius);

/// Membership in the subbasis set U_f = { orderings with f > 1 }; f != 1.
bool in_U_f(const OrderingHandle& ord, const Word& f);

/// Largest r <= max_radius with equal fingerprints (0 when they already
/// differ on the radius-1 ball).
int agreement_radius(const OrderingHandle& a, const OrderingHandle& b, int max_radius);

struct OrbitEntry {
  Word conjugator;
  BallFingerprint fp;
  int fp_class = 0;  // index among the distinct fingerprints, in first-seen order
};

struct OrbitReport {
  std::vector<OrbitEntry> entries;  // one per ball element, canonical order
  int distinct_count = 0;
};

OrbitReport conjugate_orbit_fingerprints(const OrderingHandle& ord, int conj_radius,
                                         int fp_radius);

struct PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Outcome of a finite experiment; the verdict is recomputable from the
/// evidence rows alone.
struct ExperimentReport {
  std::string experiment;
  ordered_json params;
  bool pass = false;
  std::string fail_witness;  // empty when pass
  ordered_json evidence;     // array of rows
};

/// Checks the four sign predictions that distinguish the conjugates of the
/// ordering by v^{-1} and w^{-1} while keeping every family member
/// positive: a finite certificate that the two conjugates differ inside
/// the intersection of the U_f sets of the family.
ExperimentReport primero_perturbation(const OrderingHandle& ord, const CrossingCandidate& c,
                                      const std::vector<Word>& family,
                                      int n_max = kDefaultConditionBound);

/// For every free2 word beta in ball(conj_radius): y^{-1} is positive under
/// the conjugate of the exotic ordering by beta iff beta is a power of y,
/// and for those beta the conjugate matches the exotic fingerprint at
/// check_radius.
ExperimentReport rigidity_experiment(int conj_radius, int check_radius);

/// For every exotic-positive beta whose braid image is 1-positive: with k
/// the leading s2 exponent of the handle-reduced image and l minimal with
/// k' = 2l + k > 0, the word s1^{-2} s2^{2l} (image of beta) is again
/// DD-positive, i.e. x < y^l beta. The mechanism forcing any convex
/// subgroup with a 1-positive element to contain x.
ExperimentReport convex_subgroup_experiment(int radius);

/// Fingerprints of the four Klein cones: pairwise distinct, no n=2
/// violations on ball(4), and an empty crossing search at bounds
/// (4, 3, 3, 10); reports the count 4 = 2^2.
ExperimentReport klein_enumeration(int radius);

}  // namespace ordercalc
