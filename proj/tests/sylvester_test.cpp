#include "delsarte/lpsolve/delsarte_lp.hpp"
#include "delsarte/sylvester/moments.hpp"
#include "delsarte/sylvester/psd.hpp"
#include "delsarte/sylvester/sdp0.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace delsarte {
namespace {

using testing::random_rational;

Matrix<Rational> R(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m;
  for (auto row : rows) {
    m.emplace_back();
    for (long x : row) m.back().push_back(Rational(x));
  }
  return m;
}

TEST(PsdCheck, Examples) {
  auto id = R({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(psd_check(id));
  EXPECT_TRUE(psd_check(id, PsdMode::floating, 1e-9));
  auto bad = R({{1, 2}, {2, 1}});
  EXPECT_FALSE(psd_check(bad));
  EXPECT_FALSE(psd_check(bad, PsdMode::floating, 1e-9));
  EXPECT_TRUE(psd_check(R({{0, 0}, {0, 0}})));
  EXPECT_THROW(psd_check(R({{1, 2}, {3, 1}})), std::invalid_argument);
}

TEST(PsdCheck, NullPivots) {
  // Zero diagonal with a nonzero off-diagonal entry is indefinite.
  EXPECT_FALSE(psd_check(R({{0, 1}, {1, 0}})));
  EXPECT_FALSE(psd_check(R({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
  // Rank-one PSD matrices produce zero pivots after the first step.
  EXPECT_TRUE(psd_check(R({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}})));
  EXPECT_FALSE(psd_check(R({{1, 2, 3}, {2, 4, 6}, {3, 6, 8}})));
}

TEST(PsdCheck, GramMatricesRandomized) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + rng() % 6, r = 1 + rng() % 6;
    Matrix<Rational> V(r, std::vector<Rational>(n));
    for (auto& row : V)
      for (auto& x : row) x = random_rational(rng, 5, 3);
    Matrix<Rational> G(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < r; ++k) G[i][j] += V[k][i] * V[k][j];
    EXPECT_TRUE(psd_check(G));
    auto shifted = G;
    shifted[0][0] -= Rational(1, 1000000) + G[0][0];  // negative diagonal entry
    EXPECT_FALSE(psd_check(shifted));
    EXPECT_EQ(psd_check(G), psd_check(to_double(G), 1e-9));
  }
}

TEST(MomentBlocks, Examples) {
  const Rational a(-1, 3), b(1, 2);
  auto one = build_moment_blocks(PowerSums{{Rational(1), a}}, a, b);
  EXPECT_EQ(one.R, (Matrix<Rational>{{Rational(1)}}));
  EXPECT_EQ(one.Fplus, (Matrix<Rational>{{Rational(0)}}));
  EXPECT_EQ(one.Fminus, (Matrix<Rational>{{b - a}}));
  EXPECT_TRUE(one.psd());

  auto two = build_moment_blocks(PowerSums{{Rational(2), Rational(0), Rational(2), Rational(0)}}, Rational(-1), Rational(1));
  EXPECT_EQ(two.R, R({{2, 0}, {0, 2}}));
  EXPECT_EQ(two.Fplus, R({{2, 2}, {2, 2}}));
  EXPECT_EQ(two.Fminus, R({{2, -2}, {-2, 2}}));
  EXPECT_TRUE(two.psd());

  std::vector<Rational> pt{Rational(2)};
  auto out = build_moment_blocks(PowerSums::of(pt, 1), Rational(-1), Rational(1));
  EXPECT_EQ(out.Fminus, R({{-1}}));
  EXPECT_FALSE(psd_check(out.Fminus));

  EXPECT_THROW(build_moment_blocks(PowerSums{{Rational(1), Rational(0), Rational(1)}}, a, b), std::invalid_argument);
}

TEST(SylvesterForward, Examples) {
  std::vector<Rational> zero{Rational(0)};
  EXPECT_TRUE(sylvester_forward_check(zero, Rational(-1), Rational(1), 3));
  std::vector<Rational> small{Rational(1, 2), Rational(1, 2), Rational(-1, 3)};
  EXPECT_TRUE(sylvester_forward_check(small, Rational(-1), Rational(1, 2), 2));
  std::mt19937_64 rng(42);
  std::vector<Rational> fifty;
  for (int i = 0; i < 50; ++i) fifty.push_back(Rational(-1) + Rational(static_cast<long>(rng() % 1501), 1000));
  EXPECT_TRUE(sylvester_forward_check(fifty, Rational(-1), Rational(1, 2), 4));
  std::vector<Rational> outside{Rational(3, 4)};
  EXPECT_THROW(sylvester_forward_check(outside, Rational(-1), Rational(1, 2), 2), std::invalid_argument);
}

std::vector<Rational> random_points(std::mt19937_64& rng, size_t count, const Rational& a, const Rational& b) {
  std::vector<Rational> pts;
  for (size_t i = 0; i < count; ++i) pts.push_back(a + (b - a) * Rational(static_cast<long>(rng() % 1001), 1000));
  return pts;
}

TEST(SylvesterForward, RandomizedExact) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = random_rational(rng, 10, 7), b = random_rational(rng, 10, 7);
    if (b < a) std::swap(a, b);
    auto pts = random_points(rng, 1 + rng() % 8, a, b);
    EXPECT_TRUE(sylvester_forward_check(pts, a, b, 1 + static_cast<int>(rng() % 4)));
  }
}

TEST(SylvesterConverse, PerturbedPointIsDetected) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a(-1), b(1, 2);
    auto pts = random_points(rng, 1 + rng() % 5, a, b);
    pts[rng() % pts.size()] = (trial % 2) ? b + Rational(1 + static_cast<long>(rng() % 100), 200)
                                          : a - Rational(1 + static_cast<long>(rng() % 100), 200);
    const int m = static_cast<int>(pts.size());
    EXPECT_FALSE(build_moment_blocks(PowerSums::of(pts, m), a, b).psd()) << "trial " << trial;
  }
}

TEST(SylvesterNormalization, InvariantUnderScaling) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = random_rational(rng, 5, 3), b = random_rational(rng, 5, 3);
    if (b < a) std::swap(a, b);
    auto pts = random_points(rng, 1 + rng() % 6, a - Rational(1, 2), b + Rational(1, 2));
    auto s = PowerSums::of(pts, 1 + static_cast<int>(rng() % 4));
    EXPECT_EQ(build_moment_blocks(s, a, b).psd(), build_moment_blocks(s.normalized(), a, b).psd());
    EXPECT_EQ(s.normalized().values[0], Rational(1));
  }
}

TEST(SDP0, AntipodalAnalytic) {
  auto r = sdp0_solve({ZonalFamily::gegenbauer(5), Rational(-1), Rational(-1), 1});
  EXPECT_NEAR(r.bound, 2.0, 1e-9);
  ASSERT_TRUE(r.bound_exact);
  EXPECT_EQ(*r.bound_exact, Rational(2));
}

TEST(SDP0, FourDimensionsMatchesLP) {
  const Rational a(-1), b(1, 2);
  auto r = sdp0_solve({ZonalFamily::gegenbauer(4), a, b, 5});
  auto lp = delsarte_lp_dual(ZonalFamily::gegenbauer(4), a, b, 9, 500);
  EXPECT_NEAR(r.bound, lp.bound.to_double(), 0.1);
  EXPECT_TRUE(r.recheck_ok);
  ASSERT_TRUE(r.bound_exact);
  EXPECT_GE(r.bound_exact->to_double(), r.bound * (1 - 1e-9));
  auto primal = delsarte_lp_primal_lower(ZonalFamily::gegenbauer(4), a, b, 9, detail::equidistant(a, b, 50));
  EXPECT_GE(r.bound, primal.to_double());
}

TEST(SDP0, EightDimensions) {
  auto r = sdp0_solve({ZonalFamily::gegenbauer(8), Rational(-1), Rational(1, 2), 4});
  EXPECT_GE(r.bound, 240.0 - 1e-6);
  EXPECT_LT(r.bound, 241.0);
  ASSERT_TRUE(r.bound_exact);
  EXPECT_GE(*r.bound_exact, Rational(240));
}

TEST(SDP0, FinalIterateSatisfiesRecordedBlocks) {
  auto r = sdp0_solve({ZonalFamily::gegenbauer(3), Rational(-1), Rational(1, 2), 4});
  // The iterate is a pseudo-moment sequence: its blocks are PSD within the
  // re-check tolerance.
  std::vector<Rational> s{Rational(1)};
  for (double x : r.x) s.push_back(Rational::from_double(x));
  auto blocks = build_moment_blocks(PowerSums{s}, Rational(-1), Rational(1, 2));
  EXPECT_TRUE(blocks.psd(PsdMode::floating, 1e-7));
  EXPECT_GT(r.bound, 12.0);
}

TEST(SDP0, BudgetAndArgumentErrors) {
  SDP0Options opts;
  opts.cut_budget = 1;
  EXPECT_THROW(sdp0_solve({ZonalFamily::gegenbauer(4), Rational(-1), Rational(1, 2), 5}, opts), SolverError);
  EXPECT_THROW(sdp0_solve({ZonalFamily::gegenbauer(4), Rational(-1), Rational(1, 2), 0}), std::invalid_argument);
}

}  // namespace
}  // namespace delsarte
