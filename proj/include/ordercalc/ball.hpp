#pragma once

#include <functional>
#include <vector>

#include "ordercalc/words.hpp"

namespace ordercalc {

/// Word-problem oracle: true iff the word represents the group identity.
using IdentityOracle = std::function<bool(const Word&)>;

/// All distinct group elements representable by a word of length <= radius,
/// one canonical (shortest, then token-lexicographic) representative each,
/// listed in canonical order. Free2 needs no oracle and Klein falls back to
/// its normal form; braid tags require an oracle (see braid.hpp).
std::vector<Word> enumerate_ball(const GroupTag& tag, int radius,
                                 const IdentityOracle& is_identity = {});

}  // namespace ordercalc
