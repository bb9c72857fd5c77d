#include "ordercalc/crossings.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordercalc/ball.hpp"
#include "ordercalc/braid.hpp"

namespace ordercalc {

namespace {

void require_same_tag(std::initializer_list<const Word*> words, const char* what) {
  const Word* first = *words.begin();
  for (const Word* w : words)
    if (!(w->tag() == first->tag()))
      throw std::invalid_argument(std::string(what) + ": group tags differ");
}

void require_ordering_tag(const SignEvaluator& ev, const Word& w) {
  if (!(ev.ordering()->tag() == w.tag()))
    throw std::invalid_argument("candidate group does not match ordering group");
}

}  // namespace

CrossingCandidate::CrossingCandidate(Word f_, Word g_, Word u_, Word v_, Word w_, int M_, int N_)
    : f(std::move(f_)), g(std::move(g_)), u(std::move(u_)), v(std::move(v_)), w(std::move(w_)),
      M(M_), N(N_) {
  require_same_tag({&f, &g, &u, &v, &w}, "crossing candidate");
  if (M < 1 || N < 1) throw std::invalid_argument("crossing witnesses M, N must be >= 1");
  if (f.is_identity() || g.is_identity())
    throw std::invalid_argument("crossing candidate requires nonidentity f and g");
}

ReinforcedCandidate::ReinforcedCandidate(Word f_, Word g_, Word u_, Word v_, Word w_, int M_,
                                         int N_)
    : f(std::move(f_)), g(std::move(g_)), u(std::move(u_)), v(std::move(v_)), w(std::move(w_)),
      M(M_), N(N_) {
  require_same_tag({&f, &g, &u, &v, &w}, "reinforced candidate");
  if (M < 1 || N < 1) throw std::invalid_argument("crossing witnesses M, N must be >= 1");
}

DoubleCrossingCandidate::DoubleCrossingCandidate(Word f_, Word g_, Word u_, Word v_, Word w1_,
                                                 Word w2_)
    : f(std::move(f_)), g(std::move(g_)), u(std::move(u_)), v(std::move(v_)), w1(std::move(w1_)),
      w2(std::move(w2_)) {
  require_same_tag({&f, &g, &u, &v, &w1, &w2}, "double crossing candidate");
}

VerificationReport verify_crossing(const SignEvaluator& ev, const CrossingCandidate& c,
                                   int n_max) {
  require_ordering_tag(ev, c.f);
  if (n_max < std::max(c.M, c.N))
    throw std::invalid_argument("verify_crossing: n_max must be at least max(M, N)");

  if (!ev.less(c.u, c.v)) return VerificationReport::refuted(1, "u < v");

  const Word fNv = c.f.pow(c.N) * c.v;
  if (!ev.less(fNv, c.w)) return VerificationReport::refuted(3, "f^N v < w");
  const Word gMu = c.g.pow(c.M) * c.u;
  if (!ev.less(c.w, gMu)) return VerificationReport::refuted(3, "w < g^M u");

  if (!ev.less(c.u, c.w)) return VerificationReport::refuted(1, "u < w");
  if (!ev.less(c.w, c.v)) return VerificationReport::refuted(1, "w < v");

  Word gnu = c.g.pow(-n_max) * c.u;
  Word fnv = c.f.pow(-n_max) * c.v;
  for (long long n = -n_max; n <= n_max; ++n) {
    if (!ev.less(gnu, c.v)) return VerificationReport::refuted(2, "g^n u < v", n);
    if (!ev.less(c.u, fnv)) return VerificationReport::refuted(2, "f^n v > u", n);
    if (n < n_max) {
      gnu = c.g * gnu;
      fnv = c.f * fnv;
    }
  }
  return VerificationReport::up_to(n_max);
}

VerificationReport verify_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                   int n_max) {
  SignEvaluator ev(ord);
  return verify_crossing(ev, c, n_max);
}

VerificationReport verify_reinforced(const SignEvaluator& ev, const ReinforcedCandidate& c) {
  require_ordering_tag(ev, c.f);
  if (!ev.less(c.u, c.v)) return VerificationReport::refuted(1, "u < v");
  if (!ev.less(c.u, c.w)) return VerificationReport::refuted(1, "u < w");
  if (!ev.less(c.w, c.v)) return VerificationReport::refuted(1, "w < v");
  if (!ev.less(c.u, c.f * c.u)) return VerificationReport::refuted(2, "f u > u");
  if (!ev.less(c.g * c.v, c.v)) return VerificationReport::refuted(2, "g v < v");
  if (!ev.less(c.f.pow(c.N) * c.v, c.w)) return VerificationReport::refuted(3, "f^N v < w");
  if (!ev.less(c.w, c.g.pow(c.M) * c.u)) return VerificationReport::refuted(3, "w < g^M u");
  return VerificationReport::exact();
}

VerificationReport verify_reinforced(const OrderingHandle& ord, const ReinforcedCandidate& c) {
  SignEvaluator ev(ord);
  return verify_reinforced(ev, c);
}

VerificationReport verify_double_crossing(const SignEvaluator& ev,
                                          const DoubleCrossingCandidate& c) {
  require_ordering_tag(ev, c.f);
  if (!ev.less(c.u, c.w1)) return VerificationReport::refuted(1, "u < w1");
  if (!ev.less(c.w1, c.w2)) return VerificationReport::refuted(1, "w1 < w2");
  if (!ev.less(c.w2, c.v)) return VerificationReport::refuted(1, "w2 < v");
  if (!ev.less(c.w1, c.g * c.u)) return VerificationReport::refuted(3, "g u > w1");
  if (!ev.less(c.g * c.v, c.w2)) return VerificationReport::refuted(3, "g v < w2");
  if (!ev.less(c.f * c.w2, c.w1)) return VerificationReport::refuted(3, "f w2 < w1");
  if (!ev.less(c.u, c.f * c.u)) return VerificationReport::refuted(2, "f u > u");
  if (!ev.less(c.v, c.f * c.v)) return VerificationReport::refuted(2, "f v > v");
  return VerificationReport::exact();
}

VerificationReport verify_double_crossing(const OrderingHandle& ord,
                                          const DoubleCrossingCandidate& c) {
  SignEvaluator ev(ord);
  return verify_double_crossing(ev, c);
}

ReinforcedCandidate to_reinforced(const CrossingCandidate& c) {
  const Word fN = c.f.pow(c.N);
  const Word gM = c.g.pow(c.M);
  return ReinforcedCandidate(fN * gM, gM * fN, fN * c.w, gM * c.w, c.w, c.M, c.N);
}

CrossingCandidate as_crossing(const ReinforcedCandidate& c) {
  return CrossingCandidate(c.f, c.g, c.u, c.v, c.w, c.M, c.N);
}

CrossingCandidate transform_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                     const CrossingMove& move) {
  SignEvaluator ev(ord);
  require_ordering_tag(ev, c.f);
  if (const auto* m = std::get_if<ShiftWByG>(&move)) {
    if (m->n < 1) throw std::invalid_argument("shift exponent must be >= 1");
    return CrossingCandidate(c.f, c.g, c.u, c.v, c.g.pow(m->n) * c.w, c.M + m->n, c.N);
  }
  if (const auto* m = std::get_if<ShiftWByF>(&move)) {
    if (m->n < 1) throw std::invalid_argument("shift exponent must be >= 1");
    return CrossingCandidate(c.f, c.g, c.u, c.v, c.f.pow(m->n) * c.w, c.M, c.N + m->n);
  }
  if (const auto* m = std::get_if<ExtendU>(&move)) {
    if (m->n < 1) throw std::invalid_argument("extension exponent must be >= 1");
    const Sign dir = ev.compare(c.u, c.f * c.u);
    if (dir == Sign::Zero) throw std::logic_error("f fixes u; f cannot be the identity");
    const long long e = dir == Sign::Positive ? m->n : -m->n;
    return CrossingCandidate(c.f, c.g, c.f.pow(e) * c.u, c.v, c.w, c.M, c.N);
  }
  if (const auto* m = std::get_if<ExtendV>(&move)) {
    if (m->n < 1) throw std::invalid_argument("extension exponent must be >= 1");
    const Sign dir = ev.compare(c.g * c.v, c.v);
    if (dir == Sign::Zero) throw std::logic_error("g fixes v; g cannot be the identity");
    const long long e = dir == Sign::Positive ? m->n : -m->n;
    return CrossingCandidate(c.f, c.g, c.u, c.g.pow(e) * c.v, c.w, c.M, c.N);
  }
  const auto& m = std::get<ConjugateMove>(move);
  const Word& h = m.h;
  if (!(h.tag() == c.f.tag()))
    throw std::invalid_argument("conjugating word has mismatched group tag");
  return CrossingCandidate(conjugate(c.f, h), conjugate(c.g, h), h * c.u, h * c.v, h * c.w,
                           c.M, c.N);
}

CrossingCandidate crossing_from_nonconradian(const OrderingHandle& ord, const Word& f,
                                             const Word& g) {
  if (ord->sign(f) != Sign::Positive || ord->sign(g) != Sign::Positive)
    throw std::invalid_argument("crossing_from_nonconradian requires positive f and g");
  const Word one = Word::identity(f.tag());
  return CrossingCandidate(f, g, one, f.inverse() * g, g.pow(2), /*M=*/3, /*N=*/1);
}

CrossingCandidate crossing_from_n2_violation(const OrderingHandle& ord, const Word& f,
                                             const Word& g) {
  if (ord->sign(f) != Sign::Positive || ord->sign(g) != Sign::Positive)
    throw std::invalid_argument("crossing_from_n2_violation requires positive f and g");
  // With f g^2 < g the element fg sits strictly between 1 and g, and
  // f^2 g < fg < (fg)^2 holds, so the frame is 1 < fg < g with fg as the
  // comparison point.
  const Word one = Word::identity(f.tag());
  const Word fg = f * g;
  return CrossingCandidate(f, fg, one, g, fg, /*M=*/2, /*N=*/2);
}

WitnessPair nonconradian_from_crossing(const OrderingHandle& ord, const CrossingCandidate& c,
                                       int n_max) {
  SignEvaluator ev(ord);
  const VerificationReport rep = verify_crossing(ev, c, n_max);
  if (!rep.ok())
    throw std::invalid_argument("nonconradian_from_crossing: candidate failed verification (" +
                                rep.refutation->comparison + ")");
  const Word winv = c.w.inverse();
  const Word h = conjugate(c.g.pow(c.M) * c.f.pow(c.N), winv);
  const Word h_bar = conjugate(c.g.pow(c.M), winv);
  if (ev.sign(h) != Sign::Positive)
    throw std::logic_error("witness h is not positive; verified crossing should force it");
  if (ev.sign(h_bar) != Sign::Positive)
    throw std::logic_error("witness h_bar is not positive; verified crossing should force it");
  Word acc = h;
  for (int n = 1; n <= n_max; ++n) {
    acc = acc * h_bar;  // h * h_bar^n
    if (!ev.less(acc, h_bar))
      throw std::logic_error("defect inequality h h_bar^n < h_bar failed at n = " +
                             std::to_string(n));
  }
  return WitnessPair{h, h_bar, n_max};
}

CrossingCandidate refine_between(const OrderingHandle& ord, const CrossingCandidate& c,
                                 const Word& h1, const Word& h2, int n_max) {
  SignEvaluator ev(ord);
  const VerificationReport rep = verify_crossing(ev, c, n_max);
  if (!rep.ok())
    throw std::invalid_argument("refine_between: candidate failed verification (" +
                                rep.refutation->comparison + ")");
  if (ev.sign(c.u) == Sign::Negative)
    throw std::invalid_argument("refine_between requires 1 <= u");
  if (!ev.less(c.w, h2)) throw std::invalid_argument("refine_between requires w < h2");
  if (ev.sign(h1) == Sign::Negative)
    throw std::invalid_argument("refine_between requires h1 positive or identity");

  const int out_bound = n_max - (c.M + c.N);
  if (out_bound < std::max(c.M, c.N))
    throw std::invalid_argument("refine_between: n_max too small to certify the output");

  // Conjugate by f^N, then by gbar^M; if that pushed the v slot upward,
  // lower it back (the extension move applied downward M times).
  const Word fN = c.f.pow(c.N);
  const CrossingCandidate c1 = transform_crossing(ord, c, ConjugateMove{fN});
  const Word gbarM = c1.g.pow(c1.M);
  const CrossingCandidate c2 = transform_crossing(ord, c1, ConjugateMove{gbarM});
  const Word v_out = ev.less(c2.v, c1.v) ? c2.v : c1.v;
  const CrossingCandidate out(c2.f, c2.g, c2.u, v_out, c2.w, c.M, c.N);

  if (!ev.less(h1, out.u))
    throw std::invalid_argument("refine_between: h1 < u' failed; h1 is not separated by c");
  if (!ev.less(out.v, h2)) throw std::logic_error("refine_between: v' < h2 failed");
  const VerificationReport out_rep = verify_crossing(ev, out, out_bound);
  if (!out_rep.ok())
    throw std::logic_error("refine_between: refined candidate failed verification (" +
                           out_rep.refutation->comparison + ")");
  return out;
}

namespace {

// Index-keyed working set for the canonical-order search. Pair predicates
// are cached lazily in tri-state tables; the per-exponent condition
// collapses to a direction probe plus one endpoint comparison because the
// orbits f^n v and g^n u are monotone.
class SearchSpace {
 public:
  SearchSpace(const SignEvaluator& ev, const SearchBounds& b)
      : ev_(ev), b_(b), ball_(enumerate_ball(ev.ordering()->tag(), b.ball_radius,
                                             default_identity_oracle(ev.ordering()->tag()))) {
    n_ = static_cast<int>(ball_.size());
    less_.assign(static_cast<std::size_t>(n_) * n_, 0);
    dirf_.assign(static_cast<std::size_t>(n_) * n_, 0);
    dirg_.assign(static_cast<std::size_t>(n_) * n_, 0);
    signs_.reserve(n_);
    by_len_.assign(b.ball_radius + 1, {});
    for (int i = 0; i < n_; ++i) {
      signs_.push_back(ev_.sign(ball_[i]));
      by_len_[ball_[i].length()].push_back(i);
    }
  }

  int size() const { return n_; }
  const Word& word(int i) const { return ball_[i]; }
  Sign sign(int i) const { return signs_[i]; }
  const std::vector<int>& of_length(int l) const { return by_len_[l]; }

  bool less(int i, int j) {
    uint8_t& s = less_[static_cast<std::size_t>(i) * n_ + j];
    if (s == 0) s = ev_.less(ball_[i], ball_[j]) ? 1 : 2;
    return s == 1;
  }
  // f v < v, the direction every crossing forces on f.
  bool f_pulls_down(int f, int v) {
    uint8_t& s = dirf_[static_cast<std::size_t>(f) * n_ + v];
    if (s == 0) s = ev_.less(ball_[f] * ball_[v], ball_[v]) ? 1 : 2;
    return s == 1;
  }
  // g u > u.
  bool g_pushes_up(int g, int u) {
    uint8_t& s = dirg_[static_cast<std::size_t>(g) * n_ + u];
    if (s == 0) s = ev_.less(ball_[u], ball_[g] * ball_[u]) ? 1 : 2;
    return s == 1;
  }
  // f^{n_max} v > u; with f v < v this settles f^n v > u for all |n| <= n_max.
  bool f_orbit_stays_above(int f, int v, int u) {
    auto [it, fresh] = endpoint_f_.try_emplace(key(f, v, u), 0);
    if (fresh) it->second = ev_.less(ball_[u], power_word(pow_f_, f, v, b_.n_max)) ? 1 : 2;
    return it->second == 1;
  }
  // g^{n_max} u < v.
  bool g_orbit_stays_below(int g, int u, int v) {
    auto [it, fresh] = endpoint_g_.try_emplace(key(g, u, v), 0);
    if (fresh) it->second = ev_.less(power_word(pow_g_, g, u, b_.n_max), ball_[v]) ? 1 : 2;
    return it->second == 1;
  }
  // Minimal N in [1, max_n] with f^N v < w, or max_n + 1; monotone in N.
  int min_witness_n(int f, int v, int w) {
    auto [it, fresh] = min_nf_.try_emplace(key(f, v, w), 0);
    if (fresh) {
      int result = b_.max_n + 1;
      Word z = ball_[v];
      for (int N = 1; N <= b_.max_n; ++N) {
        z = ball_[f] * z;
        if (ev_.less(z, ball_[w])) {
          result = N;
          break;
        }
      }
      it->second = result;
    }
    return it->second;
  }
  // Minimal M in [1, max_m] with w < g^M u, or max_m + 1.
  int min_witness_m(int g, int u, int w) {
    auto [it, fresh] = min_mg_.try_emplace(key(g, u, w), 0);
    if (fresh) {
      int result = b_.max_m + 1;
      Word z = ball_[u];
      for (int M = 1; M <= b_.max_m; ++M) {
        z = ball_[g] * z;
        if (ev_.less(ball_[w], z)) {
          result = M;
          break;
        }
      }
      it->second = result;
    }
    return it->second;
  }

 private:
  uint64_t key(int a, int b, int c) const {
    return (static_cast<uint64_t>(a) * n_ + b) * n_ + c;
  }
  const Word& power_word(std::unordered_map<uint64_t, Word>& store, int base, int arg, int exp) {
    auto it = store.find(key(base, arg, 0));
    if (it == store.end())
      it = store.emplace(key(base, arg, 0), ball_[base].pow(exp) * ball_[arg]).first;
    return it->second;
  }

  const SignEvaluator& ev_;
  const SearchBounds& b_;
  std::vector<Word> ball_;
  int n_ = 0;
  std::vector<Sign> signs_;
  std::vector<std::vector<int>> by_len_;
  std::vector<uint8_t> less_, dirf_, dirg_;
  std::unordered_map<uint64_t, uint8_t> endpoint_f_, endpoint_g_;
  std::unordered_map<uint64_t, int> min_nf_, min_mg_;
  std::unordered_map<uint64_t, Word> pow_f_, pow_g_;
};

}  // namespace

void search_crossings_stream(const SignEvaluator& ev, const SearchBounds& b,
                             const SearchConstraints& cons,
                             const std::function<bool(const CrossingCandidate&)>& sink) {
  if (b.ball_radius < 1) throw std::invalid_argument("search needs ball radius >= 1");
  if (b.max_m < 1 || b.max_n < 1)
    throw std::invalid_argument("search needs witness bounds >= 1");
  if (b.n_max < std::max(b.max_m, b.max_n))
    throw std::invalid_argument("search needs n_max >= max(max_m, max_n)");

  SearchSpace sp(ev, b);
  const int r = b.ball_radius;
  const int n = sp.size();

  for (int total = 2; total <= 5 * r; ++total) {
    for (int fi = 0; fi < n; ++fi) {
      const int lf = sp.word(fi).length();
      if (lf < 1 || lf + 1 > total) continue;
      for (int gi = 0; gi < n; ++gi) {
        const int lg = sp.word(gi).length();
        if (lg < 1 || lf + lg > total) continue;
        for (int ui = 0; ui < n; ++ui) {
          const int lu = sp.word(ui).length();
          if (lf + lg + lu > total) continue;
          if (cons.require_u_nonnegative && sp.sign(ui) == Sign::Negative) continue;
          for (int vi = 0; vi < n; ++vi) {
            const int lv = sp.word(vi).length();
            const int lw = total - lf - lg - lu - lv;
            if (lw < 0) break;  // ball is length-sorted, later v only longer
            if (lw > r) continue;
            if (cons.require_v_nonpositive && sp.sign(vi) == Sign::Positive) continue;
            if (!sp.less(ui, vi)) continue;
            if (!sp.f_pulls_down(fi, vi)) continue;
            if (!sp.g_pushes_up(gi, ui)) continue;
            if (!sp.f_orbit_stays_above(fi, vi, ui)) continue;
            if (!sp.g_orbit_stays_below(gi, ui, vi)) continue;
            for (int wi : sp.of_length(lw)) {
              if (!sp.less(ui, wi) || !sp.less(wi, vi)) continue;
              if (cons.w_below && !ev.less(sp.word(wi), *cons.w_below)) continue;
              if (cons.w_above && !ev.less(*cons.w_above, sp.word(wi))) continue;
              const int n0 = sp.min_witness_n(fi, vi, wi);
              if (n0 > b.max_n) continue;
              const int m0 = sp.min_witness_m(gi, ui, wi);
              if (m0 > b.max_m) continue;
              for (int M = m0; M <= b.max_m; ++M)
                for (int N = n0; N <= b.max_n; ++N) {
                  CrossingCandidate c(sp.word(fi), sp.word(gi), sp.word(ui), sp.word(vi),
                                      sp.word(wi), M, N);
                  if (!sink(c)) return;
                }
            }
          }
        }
      }
    }
  }
}

std::vector<SearchResult> search_crossings(const OrderingHandle& ord, const SearchBounds& bounds,
                                           int limit) {
  std::vector<SearchResult> out;
  if (limit <= 0) return out;
  SignEvaluator ev(ord);
  search_crossings_stream(ev, bounds, SearchConstraints{},
                          [&](const CrossingCandidate& c) {
                            VerificationReport rep = verify_crossing(ev, c, bounds.n_max);
                            if (rep.ok()) out.push_back(SearchResult{c, rep});
                            return static_cast<int>(out.size()) < limit;
                          });
  return out;
}

}  // namespace ordercalc
