#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsc/errors.hpp"
#include "fsc/rational.hpp"
#include "fsc/spaces.hpp"

using namespace fsc;

TEST_CASE("rational parse/format round trip and normalization") {
  CHECK(format_rational(make_rational(3, -6)) == "-1/2");
  CHECK(format_rational(make_rational(4, 6)) == "2/3");
  CHECK(format_rational(parse_rational("-7/14")) == "-1/2");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(parse_rational("77/34") == rat(77, 34));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/2x"), Error);
  CHECK(floor_rational(rat(-3, 2)) == -2);
  CHECK(ceil_rational(rat(-3, 2)) == -1);
  CHECK(ceil_rational(rat(4, 2)) == 2);
}

TEST_CASE("space parsing matches the grammar") {
  const SpaceSpec h = parse_space("H[s=3/2,p=2;n=3]");
  CHECK(h.kind == SpaceKind::BesselH);
  CHECK(h.s == rat(3, 2));
  CHECK(h.inv_p == rat(1, 2));
  CHECK(!h.inv_q);
  CHECK(h.n == 3);

  const SpaceSpec b = parse_space("B[s=0,p=2,q=2;n=1]");
  CHECK(b.kind == SpaceKind::BesovB);
  CHECK(b.s == 0);
  CHECK(b.inv_p == rat(1, 2));
  CHECK(*b.inv_q == rat(1, 2));
  CHECK(b.n == 1);

  // Lebesgue exponents live strictly inside (1,oo).
  CHECK_THROWS_WITH_AS(parse_space("F[s=1,p=1;n=2]"), doctest::Contains("outside"), Error);
  try {
    parse_space("F[s=1,p=1;n=2]");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RangeError);
  }

  CHECK_THROWS_AS(parse_space("F[s=1,p=2;n=2]"), Error);   // missing fine exponent
  CHECK_THROWS_AS(parse_space("H[s=1,p=2,q=2;n=2]"), Error);  // stray fine exponent
  CHECK_THROWS_AS(parse_space("H[s=1,p=2;n=0]"), Error);
  CHECK_THROWS_AS(parse_space("Z[s=1,p=2;n=1]"), Error);

  // Byte offsets point into the input.
  try {
    parse_space("H[s=1,p=x;n=1]");
    CHECK(false);
  } catch (const Error& e) {
    REQUIRE(e.offset().has_value());
    CHECK(*e.offset() == 8);
  }
}

TEST_CASE("render is the canonical formatter inverted by parse") {
  for (const char* text :
       {"H[s=3/2,p=2;n=3]", "B[s=0,p=2,q=2;n=1]", "F[s=-1,p=3/2,q=7;n=2]",
        "W[s=-5/2,p=17/10;n=3]"}) {
    const SpaceSpec sp = parse_space(text);
    CHECK(render_space(sp) == text);
    CHECK(parse_space(render_space(sp)) == sp);
  }
}

TEST_CASE("lebesgue regularity") {
  CHECK(lebesgue_regularity(parse_space("H[s=2,p=2;n=3]")) == rat(-1, 6));
  CHECK(lebesgue_regularity(parse_space("H[s=0,p=2;n=1]")) == rat(1, 2));
  CHECK(lebesgue_regularity(parse_space("B[s=1,p=2,q=2;n=2]")) == 0);
}

TEST_CASE("dual space") {
  const SpaceSpec f = parse_space("F[s=1,p=3,q=2;n=2]");
  const SpaceSpec dual = dual_space(f);
  CHECK(dual.s == -1);
  CHECK(dual.inv_p == rat(2, 3));
  CHECK(*dual.inv_q == rat(1, 2));
  CHECK(dual.n == 2);

  const SpaceSpec h = parse_space("H[s=0,p=2;n=1]");
  CHECK(dual_space(h) == h);  // self-dual point

  // Fractional W duals leave the scale.
  CHECK_THROWS_AS(dual_space(parse_space("W[s=1/2,p=2;n=1]")), Error);
  CHECK(dual_space(parse_space("W[s=2,p=3;n=1]")).s == -2);
}

TEST_CASE("dual space is an involution on a rational grid") {
  for (long num = -4; num <= 6; ++num) {
    for (const auto& [pn, pd] : {std::pair<long, long>{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}}) {
      const SpaceSpec sp = make_space(SpaceKind::TriebelF, rat(num, 2), rat(pn, pd),
                                      rat(1, 3), 2);
      CHECK(dual_space(dual_space(sp)) == sp);
      // 1/r(dual) = 1 - 1/p + s/n
      CHECK(lebesgue_regularity(dual_space(sp)) ==
            Rational(1) - sp.inv_p + sp.s / sp.n);
    }
  }
}

TEST_CASE("interpolation is the componentwise affine combination") {
  const SpaceSpec a = parse_space("H[s=0,p=2;n=1]");
  const SpaceSpec b = parse_space("H[s=2,p=2;n=1]");
  const SpaceSpec mid = interpolate(a, b, rat(1, 2));
  CHECK(mid == parse_space("H[s=1,p=2;n=1]"));

  const SpaceSpec f1 = parse_space("F[s=1,p=4,q=2;n=3]");
  const SpaceSpec f2 = parse_space("F[s=3,p=4/3,q=2;n=3]");
  const SpaceSpec q = interpolate(f1, f2, rat(1, 4));
  CHECK(q.s == rat(3, 2));
  CHECK(q.inv_p == rat(3, 8));
  CHECK(*q.inv_q == rat(1, 2));

  CHECK(interpolate(a, a, rat(1, 3)) == a);
  CHECK_THROWS_AS(interpolate(a, b, rat(0)), Error);
  CHECK_THROWS_AS(interpolate(a, b, rat(1)), Error);
  CHECK_THROWS_AS(interpolate(a, parse_space("H[s=2,p=2;n=2]"), rat(1, 2)), Error);
  CHECK_THROWS_AS(interpolate(a, parse_space("B[s=2,p=2,q=2;n=1]"), rat(1, 2)), Error);
}

TEST_CASE("effective fine exponents") {
  CHECK(effective_inv_q(parse_space("H[s=7/3,p=5;n=2]")) == rat(1, 2));
  CHECK(effective_inv_q(parse_space("W[s=2,p=5;n=2]")) == rat(1, 2));
  CHECK(effective_inv_q(parse_space("W[s=1/2,p=5;n=2]")) == rat(1, 5));
  CHECK(effective_inv_q(parse_space("F[s=1,p=5,q=3;n=2]")) == rat(1, 3));
}
