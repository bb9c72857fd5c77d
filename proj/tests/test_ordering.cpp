#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordercalc/ball.hpp"
#include "ordercalc/braid.hpp"
#include "ordercalc/order_space.hpp"
#include "ordercalc/ordering.hpp"

using namespace ordercalc;

namespace {

const GroupTag kF2 = GroupTag::free2();
const GroupTag kK = GroupTag::klein();

Word wf(const std::string& s) { return Word::parse(s, kF2); }
Word wk(const std::string& s) { return Word::parse(s, kK); }

std::vector<OrderingHandle> builtin_handles() {
  return {dehornoy_ordering(3), dd_ordering(3),      exotic_c_ordering(), klein_cone(1, 1),
          klein_cone(1, -1),    klein_cone(-1, 1),   klein_cone(-1, -1)};
}

std::vector<Word> ball_for(const OrderingHandle& ord, int r) {
  return enumerate_ball(ord->tag(), r, default_identity_oracle(ord->tag()));
}

}  // namespace

TEST_CASE("exotic ordering signs") {
  const auto ord = exotic_c_ordering();
  CHECK(is_positive(ord, wf("y")) == Sign::Negative);
  CHECK(is_positive(ord, wf("Y")) == Sign::Positive);
  CHECK(is_positive(ord, wf("x")) == Sign::Positive);
  CHECK(is_positive(ord, Word::identity(kF2)) == Sign::Zero);
  CHECK_THROWS_AS(is_positive(ord, wk("a")), std::invalid_argument);
}

TEST_CASE("klein cone signs") {
  const auto pp = klein_cone(1, 1);
  CHECK(is_positive(pp, wk("Ab")) == Sign::Positive);
  CHECK(is_positive(pp, wk("a")) == Sign::Positive);
  CHECK(compare(pp, wk("a"), wk("b")) == Sign::Positive);  // a < b
  CHECK(is_positive(klein_cone(-1, 1), wk("a")) == Sign::Negative);
  CHECK_THROWS_AS(klein_cone(0, 1), std::invalid_argument);
}

TEST_CASE("compare is the sign of u^-1 v") {
  const auto ord = exotic_c_ordering();
  CHECK(compare(ord, wf("Y"), wf("x")) == Sign::Positive);  // y^-1 < x
  CHECK(compare(ord, wf("xy"), wf("xy")) == Sign::Zero);
  // sign(w^-1) = -sign(w) on a ball
  for (const Word& w : ball_for(ord, 2))
    CHECK(is_positive(ord, w.inverse()) == negate(is_positive(ord, w)));
}

TEST_CASE("conjugate ordering") {
  const auto exotic = exotic_c_ordering();
  CHECK(fingerprint(conjugate_ordering(exotic, Word::identity(kF2)), 3) ==
        fingerprint(exotic, 3));
  for (int k : {-2, -1, 1, 2})
    CHECK(fingerprint(conjugate_ordering(exotic, wf("y").pow(k)), 3) == fingerprint(exotic, 3));
  CHECK_FALSE(fingerprint(conjugate_ordering(exotic, wf("x")), 3) == fingerprint(exotic, 3));
}

TEST_CASE("conjugation contract") {
  for (const auto& ord : {exotic_c_ordering(), klein_cone(1, -1)}) {
    const auto ball = ball_for(ord, 2);
    for (const Word& h : ball)
      for (const Word& g : ball)
        CHECK(is_positive(conjugate_ordering(ord, h), g) == is_positive(ord, conjugate(g, h)));
  }
}

TEST_CASE("convex extension") {
  const auto exotic = exotic_c_ordering();

  // inner = outer: the extension changes nothing
  const auto same = convex_extension(exotic, gen_y_subgroup(), exotic);
  CHECK(fingerprint(same, 3) == fingerprint(exotic, 3));

  // membership = whole group: the extension is the inner ordering
  const auto conj_x = conjugate_ordering(exotic, wf("x"));
  const auto all_inner = convex_extension(exotic, whole_group(kF2), conj_x);
  CHECK(fingerprint(all_inner, 3) == fingerprint(conj_x, 3));

  // flipping the order on <y>: signs agree off <y>, flip on it
  const auto flipped = convex_extension(exotic, gen_y_subgroup(), conj_x);
  const auto gen_y = gen_y_subgroup();
  for (const Word& w : ball_for(exotic, 3)) {
    if (w.is_identity()) continue;
    if (gen_y.contains(w))
      CHECK(is_positive(flipped, w) == negate(is_positive(exotic, w)));
    else
      CHECK(is_positive(flipped, w) == is_positive(exotic, w));
  }

  CHECK_THROWS_AS(convex_extension(exotic, gen_a_subgroup(), exotic), std::invalid_argument);
}

TEST_CASE("order axioms on small balls for every builtin handle") {
  for (const auto& ord : builtin_handles()) {
    CAPTURE(ord->designator());
    const auto b2 = ball_for(ord, 2);

    // trichotomy and antisymmetry
    for (const Word& w : b2) {
      const Sign s = is_positive(ord, w);
      if (w.is_identity())
        CHECK(s == Sign::Zero);
      else
        CHECK(s != Sign::Zero);
      CHECK(is_positive(ord, w.inverse()) == negate(s));
    }

    // transitivity on radius-1 triples
    const auto b1 = ball_for(ord, 1);
    for (const Word& u : b1)
      for (const Word& v : b1)
        for (const Word& t : b1)
          if (compare(ord, u, v) == Sign::Positive && compare(ord, v, t) == Sign::Positive)
            CHECK(compare(ord, u, t) == Sign::Positive);

    // cone closure on radius-2 pairs
    std::vector<Word> pos;
    for (const Word& w : b2)
      if (is_positive(ord, w) == Sign::Positive) pos.push_back(w);
    for (const Word& a : pos)
      for (const Word& b : pos) CHECK(is_positive(ord, a * b) == Sign::Positive);
  }
}

TEST_CASE("left invariance of compare on samples") {
  const auto ord = exotic_c_ordering();
  const auto ball = ball_for(ord, 2);
  for (std::size_t i = 0; i < ball.size(); i += 3)
    for (std::size_t j = 0; j < ball.size(); j += 4)
      for (std::size_t k = 0; k < ball.size(); k += 5)
        CHECK(compare(ord, ball[i], ball[j]) ==
              compare(ord, ball[k] * ball[i], ball[k] * ball[j]));
}

TEST_CASE("least positive element of the exotic ordering on ball(3)") {
  const auto ord = exotic_c_ordering();
  const Word least = wf("Y");
  for (const Word& g : ball_for(ord, 3)) {
    if (is_positive(ord, g) != Sign::Positive) continue;
    const Sign c = compare(ord, least, g);
    CHECK((c == Sign::Zero || c == Sign::Positive));
  }
}

TEST_CASE("designator parse and print round trip") {
  for (const std::string& d :
       {"dehornoy:3", "dd:3", "exoticC", "klein:++", "klein:+-", "klein:-+", "klein:--",
        "conj(exoticC,x)", "conj(dd:3,s1 S2)", "ext(exoticC,gen-y,conj(exoticC,x))",
        "ext(klein:++,gen-a,klein:--)", "ext(exoticC,all,exoticC)"}) {
    CAPTURE(d);
    const auto ord = parse_ordering(d);
    CHECK(ord->designator() == d);
    CHECK(parse_ordering(ord->designator())->designator() == d);
  }
  CHECK_THROWS_AS(parse_ordering("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordering("klein:+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordering("conj(exoticC)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordering("ext(exoticC,gen-a,exoticC)"), std::invalid_argument);
}

TEST_CASE("sign evaluator caches by word") {
  SignEvaluator ev(exotic_c_ordering());
  CHECK(ev.sign(wf("Y")) == Sign::Positive);
  CHECK(ev.sign(wf("Y")) == Sign::Positive);
  CHECK(ev.cache_size() == 1);
  CHECK(ev.less(wf("Y"), wf("x")));
}

TEST_CASE("embedding doubles letters") {
  CHECK(embed_free2_in_braid3(wf("xY")) == Word::parse("s1 s1 S2 S2", GroupTag::braid(3)));
  CHECK(embed_free2_in_braid3(Word::identity(kF2)).is_identity());
}
