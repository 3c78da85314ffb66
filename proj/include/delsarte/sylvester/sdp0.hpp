#pragma once

// SDP_0: minimize y subject to the linearized Delsarte inequalities
//   y + sum_{d=1}^{k} p_kd x_d >= -p_k0,   k = 1..2m-1,
// and PSD of the normalized moment blocks built from (1, x_1, ..., x_{2m-1}).
// The code bound is (1 + y*) / y*.
//
// Solved by Kelley cutting planes: each negative eigenvector v of a block
// B(x) gives the valid linear cut v^T B(x) v >= 0. Eigenvectors are rounded to
// dyadic rationals, so every cut is an exact rational inequality and a final
// exact LP over the accumulated cuts yields a rigorous lower bound on y*.

#include "delsarte/lpsolve/delsarte_lp.hpp"
#include "delsarte/sylvester/moments.hpp"
#include "delsarte/zonal/zonal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace delsarte {

struct SDP0Instance {
  ZonalFamily family;
  Rational a;
  Rational b;
  int m = 1;
};

struct SDP0Options {
  int cut_budget = 2000;
  double psd_tolerance = 1e-9;    // relative to the largest diagonal entry
  double recheck_tolerance = 1e-7;
  unsigned cut_bits = 20;
  bool exact_resolve = true;
};

struct SDP0Result {
  double y_star = 0;
  double bound = 0;
  std::vector<double> x;  // x_1 .. x_{2m-1}
  int iterations = 0;
  size_t cuts = 0;
  double eigenvalue_floor = 0;  // smallest block eigenvalue at the final iterate
  bool recheck_ok = false;
  // Exact re-solve over the accumulated cuts: y_exact <= y*, so the bound
  // (1 + y_exact) / y_exact is a rigorous upper bound on the code size.
  std::optional<Rational> y_exact;
  std::optional<Rational> bound_exact;
};

namespace detail {

// One linear inequality coeffs . (y, x_1, ..., x_{2m-1}) >= rhs.
struct SdpRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// The LP dual of min y s.t. rows: max sum rhs_r l_r, sum_r l_r coeffs_r = e_y,
// l >= 0. Few equality rows and one column per inequality keeps the tableau
// small however many cuts accumulate.
template <class T>
LinearProgram<T> sdp_dual_lp(const std::vector<SdpRow>& rows, size_t width) {
  auto conv = [](const Rational& r) {
    if constexpr (std::is_same_v<T, double>) return r.to_double();
    else return r;
  };
  LinearProgram<T> lp(rows.size(), Sense::maximize);
  for (size_t r = 0; r < rows.size(); ++r) lp.objective[r] = conv(rows[r].rhs);
  for (size_t j = 0; j < width; ++j) {
    std::vector<T> coeffs(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) coeffs[r] = conv(rows[r].coeffs[j]);
    lp.add(std::move(coeffs), Relation::equal, T(j == 0 ? 1 : 0));
  }
  return lp;
}

// h_d = sum_{i+j=d} v_i v_j, so that v^T Hankel(s) v = sum_d h_d s_d.
inline std::vector<Rational> hankel_weights(const std::vector<Rational>& v) {
  std::vector<Rational> h(2 * v.size() - 1);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) h[i + j] += v[i] * v[j];
  return h;
}

// Coefficients over (s_0, ..., s_{2m-1}) of v^T B v for block 0 (R),
// 1 (F+) or 2 (F-).
inline std::vector<Rational> block_form(int block, const std::vector<Rational>& v, const Rational& a,
                                        const Rational& b) {
  const auto h = hankel_weights(v);
  std::vector<Rational> s(2 * v.size());
  for (size_t d = 0; d < h.size(); ++d) {
    switch (block) {
      case 0: s[d] += h[d]; break;
      case 1: s[d + 1] += h[d]; s[d] -= a * h[d]; break;
      default: s[d] += b * h[d]; s[d + 1] -= h[d]; break;
    }
  }
  return s;
}

}  // namespace detail

inline SDP0Result sdp0_solve(const SDP0Instance& inst, const SDP0Options& opts = {}) {
  if (inst.m < 1) throw std::invalid_argument("block order m must be >= 1");
  if (inst.b < inst.a) throw std::invalid_argument("interval lower bound exceeds upper bound");
  const int m = inst.m;
  const size_t width = static_cast<size_t>(2 * m);  // y, x_1..x_{2m-1}
  const Rational eps(1, 1000000000);

  std::vector<detail::SdpRow> rows;
  for (int k = 1; k <= 2 * m - 1; ++k) {
    const Poly phi = inst.family.poly(k);
    detail::SdpRow row{std::vector<Rational>(width), -phi.coeff(0)};
    row.coeffs[0] = Rational(1);
    for (int d = 1; d <= k; ++d) row.coeffs[static_cast<size_t>(d)] = phi.coeff(static_cast<size_t>(d));
    rows.push_back(std::move(row));
  }
  {
    detail::SdpRow row{std::vector<Rational>(width), eps};
    row.coeffs[0] = Rational(1);
    rows.push_back(std::move(row));
  }
  // x_d averages t^d over t in [a, b], so |x_d| <= max(|a|, |b|)^d.
  const Rational M = std::max(inst.a.abs(), inst.b.abs());
  for (size_t d = 1; d < width; ++d) {
    const Rational box = M.pow(static_cast<unsigned>(d));
    detail::SdpRow lo{std::vector<Rational>(width), -box}, hi{std::vector<Rational>(width), -box};
    lo.coeffs[d] = Rational(1);
    hi.coeffs[d] = Rational(-1);
    rows.push_back(std::move(lo));
    rows.push_back(std::move(hi));
  }
  const size_t base_rows = rows.size();

  // Cut over (s_0..s_{2m-1}) with s_0 = 1 moved to the right-hand side.
  auto add_cut = [&](const std::vector<Rational>& s) {
    detail::SdpRow row{std::vector<Rational>(width), -s[0]};
    for (size_t d = 1; d < width; ++d) row.coeffs[d] = s[d];
    rows.push_back(std::move(row));
  };

  SDP0Result out;
  std::vector<double> z;
  const double da = inst.a.to_double(), db = inst.b.to_double();
  for (int round = 0;; ++round) {
    auto sol = simplex_solve(detail::sdp_dual_lp<double>(rows, width));
    if (sol.status == LPStatus::infeasible) throw SolverError("SDP0 relaxation is unbounded; increase m or degree");
    if (sol.status != LPStatus::optimal) throw SolverError("SDP0 relaxation is infeasible");
    z = sol.dual_values;
    out.iterations = round + 1;

    std::vector<double> sbar(width);
    sbar[0] = 1;
    for (size_t d = 1; d < width; ++d) sbar[d] = z[d];
    Eigen::MatrixXd blk[3];
    for (auto& B : blk) B.resize(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const size_t ij = static_cast<size_t>(i + j);
        blk[0](i, j) = sbar[ij];
        blk[1](i, j) = sbar[ij + 1] - da * sbar[ij];
        blk[2](i, j) = db * sbar[ij] - sbar[ij + 1];
      }
    double floor_eig = INFINITY;
    bool added = false;
    for (int q = 0; q < 3; ++q) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk[q]);
      const double scale = std::max(1.0, blk[q].diagonal().cwiseAbs().maxCoeff());
      for (int e = 0; e < m; ++e) {
        const double lambda = es.eigenvalues()(e);
        floor_eig = std::min(floor_eig, lambda);
        if (lambda >= -opts.psd_tolerance * scale) continue;
        Eigen::VectorXd v = es.eigenvectors().col(e);
        v /= v.cwiseAbs().maxCoeff();
        std::vector<Rational> vr;
        for (int i = 0; i < m; ++i) vr.push_back(round_dyadic(Rational::from_double(v(i)), opts.cut_bits));
        add_cut(detail::block_form(q, vr, inst.a, inst.b));
        added = true;
      }
    }
    out.eigenvalue_floor = floor_eig;
    if (!added) break;
    if (round + 1 >= opts.cut_budget) {
      std::ostringstream msg;
      msg << "SDP0 cut budget exhausted after " << out.iterations << " rounds; last iterate y = " << z[0]
          << ", eigenvalue floor " << floor_eig;
      throw SolverError(msg.str());
    }
  }

  out.cuts = rows.size() - base_rows;
  out.y_star = z[0];
  out.x.assign(z.begin() + 1, z.end());
  if (out.y_star <= 2 * eps.to_double()) throw SolverError("SDP0 relaxation is unbounded; increase m or degree");
  out.bound = (1 + out.y_star) / out.y_star;
  out.recheck_ok = out.eigenvalue_floor >= -opts.recheck_tolerance;

  if (opts.exact_resolve) {
    auto exact = simplex_solve(detail::sdp_dual_lp<Rational>(rows, width));
    if (exact.status == LPStatus::optimal && exact.value.sign() > 0) {
      out.y_exact = exact.value;
      out.bound_exact = (Rational(1) + exact.value) / exact.value;
    }
  }
  return out;
}

}  // namespace delsarte
