#include <gtest/gtest.h>

#include <random>

#include "nearring/checks.hpp"
#include "nearring/intpoly.hpp"

using namespace nearring;

namespace {

IntPoly mono(long c, std::size_t e) { return IntPoly::monomial(c, e); }

// Composition oracle: expand p(q) as sum c_i q^i with repeated multiplication.
IntPoly compose_by_powers(const IntPoly& p, const IntPoly& q) {
  IntPoly acc, power = IntPoly::constant(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc = acc + p.coeff(i) * power;
    power = power * q;
  }
  return acc;
}

}  // namespace

TEST(IntPoly, NormalizesTrailingZeros) {
  const IntPoly p(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(IntPoly(std::vector<Integer>{0, 0}).is_zero());
  EXPECT_EQ(IntPoly({0, 0, 3}), mono(3, 2));
}

TEST(IntPoly, ZeroDegreeIsMinusInfinity) {
  const IntPoly z;
  EXPECT_FALSE(z.degree().is_finite());
  EXPECT_THROW((void)z.degree().value(), std::domain_error);
  EXPECT_LT(z.degree(), IntPoly::constant(5).degree());
  EXPECT_EQ(IntPoly::constant(5).degree(), Degree(0));
  EXPECT_EQ(mono(1, 7).degree().value(), 7u);
}

TEST(IntPoly, ArithmeticExamples) {
  EXPECT_EQ(add(mono(1, 2), mono(1, 3)), IntPoly({0, 0, 1, 1}));
  const IntPoly p = parse_poly("3x^4 - x + 7");
  EXPECT_TRUE(sub(p, p).is_zero());
  const IntPoly s = mono(1, 2) + mono(1, 8);
  EXPECT_EQ(mul(s, s), mono(1, 4) + mono(2, 10) + mono(1, 16));
  EXPECT_EQ(mul(s, s) - mono(1, 4) - mono(1, 16), mono(2, 10));
  EXPECT_EQ(-p, Integer(-1) * p);
}

TEST(IntPoly, ComposeExamples) {
  EXPECT_EQ(compose(parse_poly("x^2+2"), parse_poly("2x^3-1")), parse_poly("4x^6-4x^3+3"));
  const IntPoly p = parse_poly("5x^3 - 2x + 1");
  EXPECT_EQ(compose(p, IntPoly::x()), p);
  EXPECT_EQ(compose(IntPoly::x(), p), p);
  EXPECT_EQ(compose(mono(1, 4), mono(1, 4)), mono(1, 16));
  EXPECT_EQ(compose(IntPoly(), p), IntPoly());
  EXPECT_EQ(compose(p, IntPoly()), IntPoly::constant(1));
}

TEST(IntPoly, CoeffAt) {
  const IntPoly p = parse_poly("4x^6-4x^3+3");
  EXPECT_EQ(coeff_at(p, 3), -4);
  EXPECT_EQ(coeff_at(p, 6), 4);
  EXPECT_EQ(coeff_at(mono(1, 2), 7), 0);
  EXPECT_EQ(coeff_at(IntPoly(), 0), 0);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 3, 6}));
}

TEST(IntPoly, PowMatchesRepeatedProduct) {
  const IntPoly p = parse_poly("x^2 - 3x + 1");
  IntPoly acc = IntPoly::constant(1);
  for (unsigned e = 0; e < 7; ++e) {
    EXPECT_EQ(pow(p, e), acc) << e;
    acc = acc * p;
  }
}

TEST(IntPoly, ArbitraryPrecision) {
  const IntPoly p = mono(1000000007, 1) + IntPoly::constant(1);
  const IntPoly big = pow(p, 12);
  Integer lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), 1000000007, 12);
  EXPECT_EQ(big.coeff(12), lead);
  EXPECT_EQ(parse_poly(render_poly(big)), big);
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_poly("2x^10"), mono(2, 10));
  const IntPoly p = parse_poly("4x^6-4x^3+3");
  EXPECT_EQ(p.coeff(6), 4);
  EXPECT_EQ(p.coeff(3), -4);
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_EQ(parse_poly("x"), IntPoly::x());
  EXPECT_EQ(parse_poly("-x"), -IntPoly::x());
  EXPECT_EQ(parse_poly(" - 3 x ^ 3 + 1 "), parse_poly("-3x^3+1"));
  EXPECT_EQ(parse_poly("x^2 + x^2"), mono(2, 2));
  EXPECT_EQ(parse_poly("x^0"), IntPoly::constant(1));
  EXPECT_EQ(parse_poly("123456789012345678901234567890"),
            IntPoly::constant(Integer("123456789012345678901234567890")));
}

TEST(Parse, ErrorsCarryPosition) {
  for (const char* bad : {"", "x^", "2x^^3", "3 4", "x^-2", "+", "2y", "x^2 +"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << '"' << bad << '"';
  }
  try {
    parse_poly("x^2 + 3y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Render, Examples) {
  EXPECT_EQ(render_poly(IntPoly()), "0");
  EXPECT_EQ(render_poly(mono(2, 10)), "2x^10");
  EXPECT_EQ(render_poly(parse_poly("4x^6-4x^3+3")), "4x^6 - 4x^3 + 3");
  EXPECT_EQ(render_poly(parse_poly("-x^2 + x - 1")), "-x^2 + x - 1");
  EXPECT_EQ(render_poly(IntPoly::constant(-7)), "-7");
}

TEST(IntPolyProperty, HornerAgreesWithPowerExpansion) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const IntPoly p = random_poly(rng, 6, 9), q = random_poly(rng, 4, 9);
    ASSERT_EQ(compose(p, q), compose_by_powers(p, q)) << p << " o " << q;
  }
}

TEST(IntPolyProperty, ParseRenderRoundTrip) {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 2000; ++n) {
    const IntPoly p = random_poly(rng, 12, 1000);
    ASSERT_EQ(parse_poly(render_poly(p)), p) << render_poly(p);
  }
}

TEST(IntPolyProperty, RingAxiomsForAddAndMul) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 500; ++n) {
    const IntPoly p = random_poly(rng, 5, 20), q = random_poly(rng, 5, 20), r = random_poly(rng, 5, 20);
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_EQ((p - q) + q, p);
  }
}

TEST(IntPolyProperty, CompositionLaws) {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 1000; ++n) {
    const IntPoly p = random_poly(rng, 3, 6), q = random_poly(rng, 3, 6), r = random_poly(rng, 3, 6);
    ASSERT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    ASSERT_EQ(compose(p + q, r), compose(p, r) + compose(q, r));
    ASSERT_EQ(compose(p * q, r), compose(p, r) * compose(q, r));
    if (p.size() >= 2 && q.size() >= 2)
      ASSERT_EQ(compose(p, q).degree().value(), p.degree().value() * q.degree().value());
    const IntPoly c = IntPoly::constant(p.coeff(0));
    ASSERT_EQ(compose(c, q), c);
  }
}

TEST(IntPoly, LeftDistributivityFails) {
  const IntPoly x = IntPoly::x(), sq = mono(1, 2);
  EXPECT_EQ(compose(sq, x + x), mono(4, 2));
  EXPECT_EQ(compose(sq, x) + compose(sq, x), mono(2, 2));
}
