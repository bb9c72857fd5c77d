#include "ordercalc/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordercalc {

namespace {

// Alphabet in token order, so depth-first generation emits each length class
// lexicographically.
std::vector<Letter> sorted_alphabet(const GroupTag& tag) {
  std::vector<Letter> alpha;
  for (int i = 1; i <= tag.generator_count(); ++i) {
    alpha.push_back(Letter{i, 1});
    alpha.push_back(Letter{i, -1});
  }
  std::sort(alpha.begin(), alpha.end(), [&](const Letter& a, const Letter& b) {
    return letter_token(tag, a) < letter_token(tag, b);
  });
  return alpha;
}

void generate_reduced(const GroupTag& tag, const std::vector<Letter>& alpha, int target_len,
                      std::vector<Letter>& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == target_len) {
    out.emplace_back(tag, prefix);
    return;
  }
  for (const Letter& l : alpha) {
    if (!prefix.empty() && prefix.back().index == l.index && prefix.back().sign == -l.sign)
      continue;
    prefix.push_back(l);
    generate_reduced(tag, alpha, target_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_ball(const GroupTag& tag, int radius,
                                 const IdentityOracle& is_identity) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");

  IdentityOracle oracle = is_identity;
  if (!oracle) {
    switch (tag.kind) {
      case GroupKind::Free2:
        break;  // freely reduced words are already canonical
      case GroupKind::Klein:
        oracle = [](const Word& w) { return klein_normal_form(w) == KleinNormalForm{}; };
        break;
      case GroupKind::Braid:
        throw std::invalid_argument("braid ball enumeration requires a word-problem oracle");
    }
  }

  const std::vector<Letter> alpha = sorted_alphabet(tag);
  std::vector<Word> words;
  std::vector<Letter> prefix;
  for (int len = 0; len <= radius; ++len)
    generate_reduced(tag, alpha, len, prefix, words);

  if (!oracle) return words;

  std::vector<Word> reps;
  for (const Word& w : words) {
    bool fresh = true;
    for (const Word& rep : reps) {
      if (oracle(rep.inverse() * w)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(w);
  }
  return reps;
}

}  // namespace ordercalc
