#include "delsarte/certify/certificate.hpp"
#include "delsarte/lpsolve/delsarte_lp.hpp"

#include <gtest/gtest.h>

#include <random>

namespace delsarte {
namespace {

const Rational kHalf(1, 2);

TEST(Simplex, Examples) {
  LinearProgram<Rational> lp1(1, Sense::maximize);
  lp1.objective = {Rational(1)};
  lp1.add({Rational(1)}, Relation::less_equal, Rational(3));
  auto s1 = simplex_solve(lp1);
  EXPECT_EQ(s1.status, LPStatus::optimal);
  EXPECT_EQ(s1.value, Rational(3));

  LinearProgram<Rational> lp2(2, Sense::maximize);
  lp2.objective = {Rational(1), Rational(1)};
  lp2.add({Rational(1), Rational(1)}, Relation::less_equal, Rational(1));
  EXPECT_EQ(simplex_solve(lp2).value, Rational(1));

  LinearProgram<Rational> lp3(1, Sense::maximize);
  lp3.objective = {Rational(1)};
  lp3.add({Rational(1)}, Relation::less_equal, Rational(1));
  lp3.add({Rational(1)}, Relation::greater_equal, Rational(2));
  EXPECT_EQ(simplex_solve(lp3).status, LPStatus::infeasible);

  LinearProgram<Rational> lp4(1, Sense::maximize);
  lp4.objective = {Rational(1)};
  EXPECT_EQ(simplex_solve(lp4).status, LPStatus::unbounded);
}

TEST(Simplex, FreeAndBoundedVariables) {
  // min x + y, x free >= -5 via bound, y in [1, 4], x + y >= -2.
  LinearProgram<Rational> lp(2, Sense::minimize);
  lp.objective = {Rational(1), Rational(1)};
  lp.set_free(0);
  lp.lower[0] = Rational(-5);
  lp.lower[1] = Rational(1);
  lp.upper[1] = Rational(4);
  lp.add({Rational(1), Rational(1)}, Relation::greater_equal, Rational(-2));
  auto s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_EQ(s.value, Rational(-2));
  EXPECT_GE(s.assignment[0], Rational(-5));
}

TEST(Simplex, DegenerateCyclingExample) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LinearProgram<Rational> lp(4, Sense::maximize);
  lp.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  lp.add({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, Relation::less_equal, Rational(0));
  lp.add({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, Relation::less_equal, Rational(0));
  lp.add({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::less_equal, Rational(1));
  auto s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_EQ(s.value, Rational(1, 20));
}

// Checks primal feasibility, dual feasibility, strong duality and
// complementary slackness exactly (all variables have lower bound 0).
void expect_optimality(const LinearProgram<Rational>& lp, const LPSolution<Rational>& s) {
  ASSERT_EQ(s.status, LPStatus::optimal);
  const bool maximize = lp.sense == Sense::maximize;
  Rational obj, dual_obj;
  for (size_t j = 0; j < lp.num_vars(); ++j) {
    EXPECT_GE(s.assignment[j].sign(), 0);
    obj += lp.objective[j] * s.assignment[j];
  }
  EXPECT_EQ(obj, s.value);
  for (size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    Rational lhs;
    for (size_t j = 0; j < lp.num_vars(); ++j) lhs += c.coeffs[j] * s.assignment[j];
    const Rational y = s.dual_values[i];
    switch (c.relation) {
      case Relation::less_equal:
        EXPECT_LE(lhs, c.rhs);
        EXPECT_GE((maximize ? y : -y).sign(), 0);
        break;
      case Relation::greater_equal:
        EXPECT_GE(lhs, c.rhs);
        EXPECT_LE((maximize ? y : -y).sign(), 0);
        break;
      case Relation::equal: EXPECT_EQ(lhs, c.rhs); break;
    }
    EXPECT_TRUE((y * (c.rhs - lhs)).is_zero()) << "row " << i;
    dual_obj += y * c.rhs;
  }
  EXPECT_EQ(dual_obj, s.value);
  for (size_t j = 0; j < lp.num_vars(); ++j) {
    Rational reduced = lp.objective[j];
    for (size_t i = 0; i < lp.constraints.size(); ++i) reduced -= s.dual_values[i] * lp.constraints[i].coeffs[j];
    EXPECT_LE((maximize ? reduced : -reduced).sign(), 0) << "column " << j;
    EXPECT_TRUE((reduced * s.assignment[j]).is_zero()) << "column " << j;
  }
}

TEST(Simplex, ComplementarySlacknessRandomized) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-5, 5), val(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 1 + rng() % 20, m = 1 + rng() % 12;
    LinearProgram<Rational> lp(n, trial % 2 ? Sense::maximize : Sense::minimize);
    std::vector<Rational> x0(n);
    for (auto& x : x0) x = Rational(val(rng));
    for (auto& c : lp.objective) c = Rational(coef(rng));
    for (size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      Rational lhs;
      for (size_t j = 0; j < n; ++j) {
        row[j] = Rational(coef(rng), 1 + static_cast<long>(rng() % 3));
        lhs += row[j] * x0[j];
      }
      switch (rng() % 3) {
        case 0: lp.add(row, Relation::less_equal, lhs + Rational(val(rng))); break;
        case 1: lp.add(row, Relation::greater_equal, lhs - Rational(val(rng))); break;
        default: lp.add(row, Relation::equal, lhs); break;
      }
    }
    // Box rows keep every instance bounded.
    for (size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(n);
      row[j] = Rational(1);
      lp.add(row, Relation::less_equal, Rational(10));
    }
    auto s = simplex_solve(lp);
    expect_optimality(lp, s);
  }
}

TEST(Simplex, FloatingModeAgrees) {
  LinearProgram<double> lp(2, Sense::maximize);
  lp.objective = {3, 2};
  lp.add({1, 1}, Relation::less_equal, 4);
  lp.add({1, 3}, Relation::less_equal, 6);
  lp.add({1, 0}, Relation::less_equal, 3);
  auto s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::optimal);
  EXPECT_NEAR(s.value, 11.0, 1e-12);
}

TEST(DelsarteDual, AntipodalAnalytic) {
  for (int n : {2, 3, 5, 8}) {
    auto r = delsarte_lp_dual(ZonalFamily::gegenbauer(n), Rational(-1), Rational(-1), 1, 2);
    EXPECT_EQ(r.bound, Rational(2)) << n;
  }
}

Certificate as_certificate(const DelsarteBound& b, int n, const Rational& z) {
  return {"lp", n, z, b.certificate.to_poly(), b.bound};
}

TEST(DelsarteDual, E8KissingExact) {
  auto r = delsarte_lp_dual(ZonalFamily::gegenbauer(8), Rational(-1), kHalf, 6, 200);
  EXPECT_EQ(r.bound, Rational(240));
  auto v = verify_certificate(as_certificate(r, 8, kHalf));
  EXPECT_TRUE(v.valid());
  EXPECT_EQ(*v.bound_value, Rational(240));
}

TEST(DelsarteDual, FourDimensionsDegreeNine) {
  auto r = delsarte_lp_dual(ZonalFamily::gegenbauer(4), Rational(-1), kHalf, 9, 500);
  EXPECT_GE(r.bound, Rational(25));
  EXPECT_LE(r.bound, Rational::parse("25.56"));
  EXPECT_EQ(r.degree, 9);
  auto v = verify_certificate(as_certificate(r, 4, kHalf));
  EXPECT_TRUE(v.valid()) << v.reason;
  EXPECT_EQ(*v.bound_value, r.bound);
  EXPECT_EQ(r.certificate.coeff(0), Rational(1));
}

TEST(DelsarteDual, NoCertificateAtLowDegree) {
  EXPECT_THROW(delsarte_lp_dual(ZonalFamily::gegenbauer(4), Rational(-1), kHalf, 3, 100), SolverError);
}

TEST(DelsarteDual, Errors) {
  auto g = ZonalFamily::gegenbauer(4);
  EXPECT_THROW(delsarte_lp_dual(g, Rational(-1), kHalf, 0, 100), std::invalid_argument);
  EXPECT_THROW(delsarte_lp_dual(g, Rational(-1), kHalf, 5, 1), std::invalid_argument);
  EXPECT_THROW(delsarte_lp_dual(g, kHalf, Rational(-1), 5, 10), std::invalid_argument);
}

TEST(DelsarteDual, MonotoneInDegree) {
  for (int n : {3, 8}) {
    std::optional<Rational> prev;
    for (int D = 1; D <= 8; ++D) {
      std::optional<Rational> bound;
      try {
        bound = delsarte_lp_dual(ZonalFamily::gegenbauer(n), Rational(-1), kHalf, D, 100).bound;
      } catch (const SolverError&) {
        EXPECT_FALSE(prev) << "certificate disappeared at degree " << D;
        continue;
      }
      if (prev) EXPECT_LE(bound->to_double(), prev->to_double() * (1 + 1e-8)) << "n=" << n << " D=" << D;
      prev = bound;
    }
  }
}

TEST(DelsarteDual, HammingSpace) {
  // Binary codes of length 7 with minimum distance 3 use distances 3..7. On
  // the integer distances the LP optimum is 16 (Hamming code); requiring
  // f <= 0 on the whole real interval can only raise the bound.
  auto k7 = ZonalFamily::krawtchouk(7);
  auto r = delsarte_lp_dual(k7, Rational(3), Rational(7), 7, 64);
  std::vector<Rational> distances{Rational(3), Rational(4), Rational(5), Rational(6), Rational(7)};
  EXPECT_EQ(delsarte_lp_primal_lower(k7, Rational(3), Rational(7), 7, distances), Rational(16));
  EXPECT_GE(r.bound.to_double(), 16.0 - 1e-9);
  EXPECT_NEAR(r.bound.to_double(), 18.1244, 1e-3);
}

TEST(DelsartePrimal, Examples) {
  auto g8 = ZonalFamily::gegenbauer(8);
  auto p8 = delsarte_lp_primal_lower(g8, Rational(-1), kHalf, 6, {Rational(-1), -kHalf, Rational(0), kHalf});
  EXPECT_NEAR(p8.to_double(), 240.0, 1e-6);
  EXPECT_EQ(delsarte_lp_primal_lower(g8, Rational(-1), kHalf, 6, {}), Rational(1));
  auto grid = detail::equidistant(Rational(-1), kHalf, 50);
  EXPECT_GE(delsarte_lp_primal_lower(ZonalFamily::gegenbauer(4), Rational(-1), kHalf, 9, grid), Rational(24));
  EXPECT_THROW(delsarte_lp_primal_lower(g8, Rational(-1), kHalf, 6, {Rational(3, 4)}), std::invalid_argument);
}

TEST(TwoPointLP, Examples) {
  auto six = two_point_lp(6, Rational(1, 4), Rational(-1, 2), 10);
  EXPECT_EQ(six.bound, Rational(27));
  EXPECT_EQ(six.certificate.coeff(0), Rational(1));

  // The pentagon's inner products are irrational; the bound tends to 5 as the
  // rational surrogates approach cos(72 deg) and cos(144 deg).
  auto coarse = two_point_lp(2, Rational::parse("0.309"), Rational::parse("-0.809"), 8);
  EXPECT_NEAR(coarse.bound.to_double(), 4.99893618481093, 1e-12);
  auto fine = two_point_lp(2, Rational::parse("0.30901699437494742"), Rational::parse("-0.80901699437494742"), 8);
  EXPECT_NEAR(fine.bound.to_double(), 5.0, 1e-12);

  EXPECT_THROW(two_point_lp(6, Rational(-1, 2), Rational(1, 4), 10), std::invalid_argument);
}

}  // namespace
}  // namespace delsarte
