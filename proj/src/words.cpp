#include "ordercalc/words.hpp"

#include <cctype>
#include <stdexcept>

namespace ordercalc {

GroupTag GroupTag::braid(int n) {
  if (n < 2) throw std::invalid_argument("braid group needs at least 2 strands");
  return GroupTag{GroupKind::Braid, n};
}

int GroupTag::generator_count() const {
  return kind == GroupKind::Braid ? strands - 1 : 2;
}

std::string GroupTag::name() const {
  switch (kind) {
    case GroupKind::Braid:
      return "braid:" + std::to_string(strands);
    case GroupKind::Free2:
      return "free2";
    case GroupKind::Klein:
      return "klein";
  }
  return "?";
}

GroupTag parse_group_tag(const std::string& name) {
  if (name == "free2") return GroupTag::free2();
  if (name == "klein") return GroupTag::klein();
  if (name.rfind("braid:", 0) == 0) {
    int n = std::stoi(name.substr(6));
    return GroupTag::braid(n);
  }
  throw std::invalid_argument("unknown group tag: " + name);
}

std::string letter_token(const GroupTag& tag, const Letter& l) {
  switch (tag.kind) {
    case GroupKind::Braid:
      return (l.sign > 0 ? "s" : "S") + std::to_string(l.index);
    case GroupKind::Free2:
      if (l.index == 1) return l.sign > 0 ? "x" : "X";
      return l.sign > 0 ? "y" : "Y";
    case GroupKind::Klein:
      if (l.index == 1) return l.sign > 0 ? "a" : "A";
      return l.sign > 0 ? "b" : "B";
  }
  return "?";
}

namespace detail {

void free_reduce(std::vector<Letter>& letters) {
  std::size_t top = 0;  // letters[0..top) is the reduced prefix
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1].index == letters[i].index &&
        letters[top - 1].sign == -letters[i].sign) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
}

void validate_letters(const GroupTag& tag, const std::vector<Letter>& letters) {
  const int gens = tag.generator_count();
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
    if (l.index < 1 || l.index > gens)
      throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                  " out of range for " + tag.name());
  }
}

}  // namespace detail

Word::Word(GroupTag tag, std::vector<Letter> letters) : tag_(tag), letters_(std::move(letters)) {
  detail::validate_letters(tag_, letters_);
  detail::free_reduce(letters_);
}

Word Word::parse(const std::string& text, const GroupTag& tag) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  bool saw_identity_token = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      saw_identity_token = true;
      ++i;
      continue;
    }
    if (c == 's' || c == 'S') {
      if (tag.kind != GroupKind::Braid)
        throw std::invalid_argument("braid generator token in " + tag.name() + " word");
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw std::invalid_argument("expected digits after '" + std::string(1, c) + "'");
      int index = std::stoi(text.substr(i + 1, j - i - 1));
      letters.push_back(Letter{index, c == 's' ? 1 : -1});
      i = j;
      continue;
    }
    auto push = [&](int index, int sign) {
      letters.push_back(Letter{index, sign});
      ++i;
    };
    switch (c) {
      case 'x':
      case 'X':
      case 'y':
      case 'Y':
        if (tag.kind != GroupKind::Free2)
          throw std::invalid_argument(std::string("token '") + c + "' invalid in " + tag.name());
        push(c == 'x' || c == 'X' ? 1 : 2, std::islower(static_cast<unsigned char>(c)) ? 1 : -1);
        break;
      case 'a':
      case 'A':
      case 'b':
      case 'B':
        if (tag.kind != GroupKind::Klein)
          throw std::invalid_argument(std::string("token '") + c + "' invalid in " + tag.name());
        push(c == 'a' || c == 'A' ? 1 : 2, std::islower(static_cast<unsigned char>(c)) ? 1 : -1);
        break;
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
    }
  }
  if (saw_identity_token && !letters.empty())
    throw std::invalid_argument("'1' must stand alone in a word");
  return Word(tag, std::move(letters));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  const bool spaced = tag_.kind == GroupKind::Braid;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    out += letter_token(tag_, letters_[i]);
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l.sign = -l.sign;
  Word w(tag_);
  w.letters_ = std::move(rev);  // already reduced
  return w;
}

Word Word::pow(long long k) const {
  Word base = k >= 0 ? *this : inverse();
  long long reps = k >= 0 ? k : -k;
  std::vector<Letter> acc;
  acc.reserve(static_cast<std::size_t>(reps) * letters_.size());
  for (long long i = 0; i < reps; ++i)
    acc.insert(acc.end(), base.letters_.begin(), base.letters_.end());
  detail::free_reduce(acc);
  Word w(tag_);
  w.letters_ = std::move(acc);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  if (!(a.tag_ == b.tag_)) throw std::invalid_argument("group tag mismatch in product");
  std::vector<Letter> acc = a.letters_;
  acc.insert(acc.end(), b.letters_.begin(), b.letters_.end());
  detail::free_reduce(acc);
  Word w(a.tag_);
  w.letters_ = std::move(acc);
  return w;
}

Word conjugate(const Word& w, const Word& h) { return h * w * h.inverse(); }

int canonical_compare(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  for (int i = 0; i < a.length(); ++i) {
    const std::string ta = letter_token(a.tag(), a.letters()[i]);
    const std::string tb = letter_token(b.tag(), b.letters()[i]);
    if (ta != tb) return ta < tb ? -1 : 1;
  }
  return 0;
}

KleinNormalForm klein_normal_form(const Word& w) {
  if (w.tag().kind != GroupKind::Klein)
    throw std::invalid_argument("klein_normal_form requires a klein word");
  KleinNormalForm nf;
  for (const Letter& l : w.letters()) {
    if (l.index == 1) {
      nf.m += (nf.n % 2 == 0 ? l.sign : -l.sign);
    } else {
      nf.n += l.sign;
    }
  }
  return nf;
}

KleinNormalForm klein_multiply(const KleinNormalForm& a, const KleinNormalForm& b) {
  const long long flip = (a.n % 2 == 0) ? 1 : -1;
  return KleinNormalForm{a.m + flip * b.m, a.n + b.n};
}

KleinNormalForm klein_power(const KleinNormalForm& a, long long k) {
  KleinNormalForm acc;
  KleinNormalForm base = a;
  long long reps = k;
  if (k < 0) {
    const long long flip = (a.n % 2 == 0) ? 1 : -1;
    base = KleinNormalForm{-flip * a.m, -a.n};
    reps = -k;
  }
  for (long long i = 0; i < reps; ++i) acc = klein_multiply(acc, base);
  return acc;
}

}  // namespace ordercalc
