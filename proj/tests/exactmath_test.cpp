#include "delsarte/exactmath/sturm.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace delsarte {
namespace {

using testing::f8_poly;
using testing::random_poly;
using testing::random_rational;

TEST(Rational, CanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).to_string(), "0/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("3.6181"), Rational(36181, 10000));
  EXPECT_EQ(Rational::parse("-2/125"), Rational(-2, 125));
  EXPECT_EQ(Rational::parse("12.88"), Rational(322, 25));
  EXPECT_EQ(Rational::parse("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(Rational::parse("240"), Rational(240));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

// Leading zeros must not switch the parser to octal.
TEST(Rational, ParseLeadingZeros) {
  EXPECT_EQ(Rational::parse("0.4525"), Rational(181, 400));
  EXPECT_EQ(Rational::parse("010"), Rational(10));
  EXPECT_EQ(Rational::parse("007/010"), Rational(7, 10));
}

TEST(Rational, FloorCeilAndDecimal) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(15974, 625).to_decimal(), "25.5584");
  EXPECT_EQ(Rational(1, 3).to_decimal(), "0.333333333333333");
}

TEST(Rational, FieldAxiomsRandomized) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(PolyArith, Examples) {
  Poly tp1{Rational(1), Rational(1)}, tm1{Rational(-1), Rational(1)};
  EXPECT_EQ(poly_arith(tp1, tm1, PolyOp::mul), Poly({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ(poly_arith(tp1, Poly(), PolyOp::add), tp1);
  EXPECT_EQ(poly_arith(tp1, tp1, PolyOp::sub), Poly());
  EXPECT_EQ(Poly().degree(), -1);
}

TEST(PolyArith, F8MonomialForm) {
  Poly expected({Rational(0), Rational(0), Rational(-1, 8), Rational(-3, 8), Rational(1, 4), Rational(3, 2),
                 Rational(1)});
  EXPECT_EQ(f8_poly(), expected);
  EXPECT_EQ(f8_poly().degree(), 6);
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(f8_poly(), Rational(1)), Rational(9, 4));
  std::mt19937_64 rng(2);
  Poly p = random_poly(rng, 5);
  EXPECT_EQ(poly_eval(p, Rational(0)), p.coeff(0));
  Poly f4({Rational(-2, 125), Rational(-217, 500), Rational(-516, 125), Rational(-1229, 125), Rational(2048, 125),
           Rational(1764, 25), Rational(0), Rational(-2688, 25), Rational(0), Rational(1344, 25)});
  EXPECT_EQ(poly_eval(f4, Rational(1)), Rational(9387, 500));
}

TEST(PolyEval, MultiplicativeRandomized) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, static_cast<int>(rng() % 7)), q = random_poly(rng, static_cast<int>(rng() % 7));
    Rational x = random_rational(rng);
    EXPECT_EQ(poly_eval(poly_arith(p, q, PolyOp::mul), x), poly_eval(p, x) * poly_eval(q, x));
    EXPECT_EQ(poly_eval(poly_arith(p, q, PolyOp::add), x), poly_eval(p, x) + poly_eval(q, x));
  }
}

TEST(PolyDivision, DivmodAndGcd) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 6), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  Poly g = gcd(Poly::linear_factor(Rational(1)) * Poly::linear_factor(Rational(2)),
               Poly::linear_factor(Rational(2)) * Poly::linear_factor(Rational(3)));
  EXPECT_EQ(g, Poly::linear_factor(Rational(2)));
}

TEST(SturmRootCount, Examples) {
  Poly t2m1({Rational(-1), Rational(0), Rational(1)});
  EXPECT_EQ(sturm_root_count(t2m1, Rational(0), Rational(2), true, true), 1);
  EXPECT_EQ(sturm_root_count(Poly::monomial(Rational(1), 2), Rational(-1), Rational(1), true, true), 1);
  EXPECT_EQ(sturm_root_count(f8_poly(), Rational(-1), Rational(1, 2), false, false), 2);
  EXPECT_EQ(sturm_root_count(f8_poly(), Rational(-1), Rational(1, 2), true, true), 4);
  EXPECT_EQ(sturm_root_count(t2m1, Rational(-1), Rational(1), false, true), 1);
}

TEST(SturmRootCount, ZeroPolynomialIsIndeterminate) {
  try {
    sturm_root_count(Poly(), Rational(0), Rational(1));
    FAIL() << "expected an error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "indeterminate root count");
  }
}

TEST(SturmRootCount, ProductsOfLinearFactorsRandomized) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> roots;
    Poly p = Poly::constant(random_rational(rng, 5, 1) + Rational(6));
    int count = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < count; ++j) {
      Rational r = random_rational(rng, 10, 4);
      roots.push_back(r);
      p *= Poly::linear_factor(r).pow(1 + static_cast<unsigned>(rng() % 2));
    }
    Rational lo = random_rational(rng, 10, 3), hi = random_rational(rng, 10, 3);
    if (hi < lo) std::swap(lo, hi);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    bool cl = rng() % 2, ch = rng() % 2;
    int expected = 0;
    for (const auto& r : roots)
      if ((lo < r || (cl && r == lo)) && (r < hi || (ch && r == hi))) ++expected;
    if (lo == hi) expected = (cl && ch && std::count(roots.begin(), roots.end(), lo)) ? 1 : 0;
    EXPECT_EQ(sturm_root_count(p, lo, hi, cl, ch), expected);
  }
}

TEST(IsolateRoots, SeparatesCloseRoots) {
  Poly p = Poly::linear_factor(Rational(1, 1000)) * Poly::linear_factor(Rational(2, 1000)) *
           Poly::linear_factor(Rational(-3, 7));
  auto roots = isolate_roots(p, Rational(-1), Rational(1), Rational(1, 1000000));
  ASSERT_EQ(roots.size(), 3U);
  for (const auto& r : roots) EXPECT_LE(r.hi - r.lo, Rational(1, 1000000));
}

TEST(NonpositiveOnInterval, Examples) {
  EXPECT_TRUE(nonpositive_on_interval(f8_poly(), Rational(-1), Rational(1, 2)));
  EXPECT_FALSE(nonpositive_on_interval(Poly::monomial(Rational(1), 1), Rational(-1), Rational(1, 2)));
  EXPECT_TRUE(nonpositive_on_interval(-Poly::monomial(Rational(1), 2), Rational(-5), Rational(5)));
  auto check = check_nonpositive(Poly::monomial(Rational(1), 1), Rational(-1), Rational(1, 2));
  ASSERT_TRUE(check.witness);
  EXPECT_GT(check.witness->sign(), 0);
}

TEST(NonpositiveOnInterval, TangentialTouchAllowed) {
  // -(t - 1/3)^2 touches zero without crossing.
  Poly p = -Poly::linear_factor(Rational(1, 3)).pow(2);
  EXPECT_TRUE(nonpositive_on_interval(p, Rational(-1), Rational(1)));
  EXPECT_FALSE(nonpositive_on_interval(p + Poly::constant(Rational(1, 1000000000)), Rational(-1), Rational(1)));
}

TEST(NonpositiveOnInterval, AgreesWithSamplingRandomized) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 6)) - Poly::constant(Rational(30));
    const Rational lo(-1), hi(1);
    bool exact = nonpositive_on_interval(p, lo, hi);
    bool sampled_positive = false;
    for (int s = 0; s <= 10000 && !sampled_positive; ++s)
      sampled_positive = p(Rational(-1) + Rational(2L * s, 10000L)).sign() > 0;
    if (sampled_positive) EXPECT_FALSE(exact);
    auto check = check_nonpositive(p, lo, hi);
    EXPECT_EQ(check.nonpositive, exact);
    if (!exact) {
      ASSERT_TRUE(check.witness);
      EXPECT_GT(p(*check.witness).sign(), 0);
    }
  }
}

}  // namespace
}  // namespace delsarte
