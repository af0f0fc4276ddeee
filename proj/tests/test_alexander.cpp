#include "doctest.h"

#include "knotsurg/alexander.hpp"
#include "knotsurg/error.hpp"
#include "knotsurg/knot_table.hpp"
#include "oracles.hpp"

using namespace knotsurg;
using knotsurg::testing::Rng;

namespace {

LaurentPoly P(const char *s) { return LaurentPoly::parse(s); }

// Alexander polynomials of the bundled knots as listed in standard knot
// tables, and confirmed by the Fox-calculus route.
const std::vector<std::pair<std::string, std::string>> kKnown = {
    {"unknot", "1"},
    {"trefoil", "t - 1 + t^-1"},
    {"figure-eight", "-t + 3 - t^-1"},
    {"cinquefoil", "t^2 - t + 1 - t^-1 + t^-2"},
    {"three-twist", "2t - 3 + 2t^-1"},
    {"stevedore", "-2t + 5 - 2t^-1"},
    {"septafoil", "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"},
    {"granny", "t^2 - 2t + 3 - 2t^-1 + t^-2"},
    {"square", "t^2 - 2t + 3 - 2t^-1 + t^-2"},
};

// Abelianized Fox derivative of a word in two generators (0, 1), all sent to t.
LaurentPoly fox(const std::vector<std::pair<int, int>> &word, int gen) {
  LaurentPoly d;
  Exponent prefix = 0;
  for (auto [g, e] : word) {
    if (e < 0)
      --prefix;
    if (g == gen)
      d += LaurentPoly::monomial(e, prefix);
    if (e > 0)
      ++prefix;
  }
  return d;
}

const LaurentPoly kOne = LaurentPoly::constant(1);

} // namespace

TEST_SUITE("alexander") {

TEST_CASE("worked examples on both routes") {
  const Braid unknot = parse_braid("B1:");
  const Braid trefoil = parse_braid("B2: s1 s1 s1");
  const Braid fig8 = parse_braid("B3: s1 s2^-1 s1 s2^-1");
  CHECK(alexander(unknot).poly() == kOne);
  CHECK(alexander_oracle(unknot).poly() == kOne);
  CHECK(alexander(trefoil).poly() == P("t - 1 + t^-1"));
  CHECK(alexander_oracle(trefoil).poly() == P("t - 1 + t^-1"));
  CHECK(alexander(fig8).poly() == P("-t + 3 - t^-1"));
  CHECK(alexander_oracle(fig8).poly() == P("-t + 3 - t^-1"));
}

TEST_CASE("oracle agrees with the two-generator trefoil group by hand") {
  // <x, y | xyx = yxy>; relator xyx y^-1 x^-1 y^-1, drop the y column.
  const std::vector<std::pair<int, int>> rel = {{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}};
  const LaurentPoly dx = fox(rel, 0);
  CHECK(dx == P("t^2 - t + 1"));
  CHECK(dx + fox(rel, 1) == LaurentPoly{}); // columns sum to zero
  CHECK(AlexanderPolynomial::normalize(dx) == alexander_oracle(parse_braid("B2: s1 s1 s1")));
}

TEST_CASE("bundled table matches known values") {
  const KnotTable &table = KnotTable::bundled();
  for (const auto &[name, poly] : kKnown) {
    CAPTURE(name);
    const KnotEntry *e = table.find(name);
    REQUIRE(e != nullptr);
    const LaurentPoly expected = P(poly.c_str());
    CHECK(alexander_oracle(e->braid).poly() == expected);
    CHECK(alexander(e->braid).poly() == expected);
  }
}

TEST_CASE("links are rejected") {
  CHECK_THROWS_AS(alexander(parse_braid("B2:")), ComponentError);
  CHECK_THROWS_AS(alexander(parse_braid("B2: s1 s1")), ComponentError);
  CHECK_THROWS_AS(alexander_oracle(parse_braid("B3: s1 s1")), ComponentError);
}

TEST_CASE("reduced Burau satisfies the braid relations") {
  auto burau = [](const char *s) { return reduced_burau(parse_braid(s)); };
  CHECK(burau("B3: s1 s2 s1") == burau("B3: s2 s1 s2"));
  CHECK(burau("B5: s2 s3 s2") == burau("B5: s3 s2 s3"));
  CHECK(burau("B4: s1 s3") == burau("B4: s3 s1"));
  CHECK(burau("B4: s2 s2^-1") == burau("B4:"));
  CHECK(burau("B4: s3^-1 s3") == burau("B4:"));
  CHECK(burau("B2: s1")[0][0] == P("-t"));
}

TEST_CASE("bareiss determinant") {
  LaurentMatrix m = {{P("t"), P("1")}, {P("1"), P("t^-1")}};
  CHECK(bareiss_determinant(m).is_zero());
  m = {{P("0"), P("1"), P("0")}, {P("1"), P("0"), P("0")}, {P("0"), P("0"), P("t")}};
  CHECK(bareiss_determinant(m) == P("-t"));
  m = {{P("1 + t"), P("2"), P("t^-1")}, {P("0"), P("t"), P("3")}, {P("1"), P("1"), P("1")}};
  // cofactor expansion by hand along the first column
  const LaurentPoly expected = P("1 + t") * (P("t") - P("3")) + (P("2") * P("3") - P("t^-1") * P("t"));
  CHECK(bareiss_determinant(m) == expected);
  CHECK(bareiss_determinant({}) == kOne);
}

TEST_CASE("normalization rejects non-Alexander input") {
  CHECK_THROWS_AS(AlexanderPolynomial::normalize(P("2t")), InternalError);
  CHECK(AlexanderPolynomial::normalize(P("-t^3")).is_one());
  CHECK_THROWS_AS(AlexanderPolynomial::normalize(P("1 + t")), InternalError);
  CHECK_THROWS_AS(AlexanderPolynomial::normalize(P("3")), InternalError);
  CHECK_THROWS_AS(AlexanderPolynomial::normalize(LaurentPoly{}), InternalError);
  CHECK(AlexanderPolynomial::normalize(P("-t^5 + t^4 - t^3")).poly() == P("t - 1 + t^-1"));
}

TEST_CASE("invariants over the table") {
  for (const auto &e : KnotTable::bundled().entries()) {
    CAPTURE(e.name);
    const AlexanderPolynomial d = alexander(e.braid);
    CHECK(is_symmetric(d.poly()));
    CHECK(evaluate(d.poly(), 1) == 1);
    const Rational det = evaluate(d.poly(), -1);
    CHECK(det.get_den() == 1);
    CHECK(mpz_odd_p(det.get_num().get_mpz_t()));
    CHECK(alexander(mirror(e.braid)) == d);
    CHECK(alexander(reverse(e.braid)) == d);
    CHECK(alexander(stabilize(e.braid, 1)) == d);
    CHECK(alexander(stabilize(e.braid, -1)) == d);
    CHECK(alexander_oracle(e.braid) == d);
  }
}

TEST_CASE("multiplicativity under connected sum") {
  const auto &entries = KnotTable::bundled().entries();
  for (const auto &a : entries)
    for (const auto &b : entries) {
      if (a.braid.length() + b.braid.length() > 14)
        continue;
      CAPTURE(a.name);
      CAPTURE(b.name);
      const Braid sum = connected_sum(a.braid, b.braid);
      const LaurentPoly product = alexander_oracle(a.braid).poly() * alexander_oracle(b.braid).poly();
      CHECK(alexander(sum).poly() == product);
    }
}

TEST_CASE("random knot braids: Burau and Fox routes agree") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const Braid b = rng.knot_braid(5, 10);
    CAPTURE(format_braid(b));
    CHECK(alexander(b) == alexander_oracle(b));
  }
}

TEST_CASE("fox_milnor_check") {
  const AlexanderPolynomial one;
  auto r = fox_milnor_check(one, 0);
  CHECK(r.satisfied);
  CHECK(r.exhaustive);
  CHECK(r.factor == kOne);

  const Braid trefoil = parse_braid("B2: s1 s1 s1");
  const AlexanderPolynomial tref = alexander_oracle(trefoil);
  const AlexanderPolynomial slice = alexander_oracle(connected_sum(trefoil, mirror_reverse(trefoil)));
  CHECK(slice.poly() == tref.poly() * tref.poly());
  r = fox_milnor_check(slice, 2);
  REQUIRE(r.satisfied);
  CHECK(r.exhaustive);
  CHECK(*r.factor * r.factor->inverted() == slice.poly());
  // the factor is t - 1 + t^-1 up to a unit
  CHECK(AlexanderPolynomial::normalize(*r.factor) == tref);

  for (Exponent bound : {1, 2, 5}) {
    r = fox_milnor_check(tref, bound);
    CHECK_FALSE(r.satisfied);
    CHECK(r.exhaustive);
  }
  r = fox_milnor_check(tref, 0);
  CHECK_FALSE(r.satisfied);
  CHECK_FALSE(r.exhaustive);
  r = fox_milnor_check(slice, 1);
  CHECK_FALSE(r.satisfied);
  CHECK_FALSE(r.exhaustive);

  CHECK_FALSE(fox_milnor_check(alexander(parse_braid("B3: s1 s2^-1 s1 s2^-1")), 1).satisfied);
  // 6_1 is slice: -2t + 5 - 2t^-1 = (2 - t)(2 - t^-1)
  CHECK(fox_milnor_check(alexander(KnotTable::bundled().find("stevedore")->braid), 1).satisfied);
}
}
