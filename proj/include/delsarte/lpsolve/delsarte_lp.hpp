#pragma once

// Delsarte linear programs over a zonal family on a forbidden interval
// S = [lo, hi] of the tau-range.
//
// Dual (certificate) side: find f_1..f_D >= 0 with
//   F(t) = 1 + sum_k f_k Phi_k(t) <= 0 on S,
// giving A(M, S) <= F(tau0) = 1 + sum_k f_k. The interval is discretized,
// the discretized LP is solved exactly, and the resulting F is checked on the
// whole interval with Sturm sequences. Violations add cut points; a residual
// violation below tolerance is absorbed by lowering f_0 by a verified margin.
// The returned bound is therefore rigorous.

#include "delsarte/exactmath/sturm.hpp"
#include "delsarte/lpsolve/simplex.hpp"
#include "delsarte/zonal/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace delsarte {

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
inline Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi
  BigInt fl = lo.floor();
  if (Rational(fl) == lo) return lo;
  if (Rational(BigInt(fl + 1)) <= hi) return Rational(BigInt(fl + 1));
  Rational frac_lo = lo - Rational(fl);
  Rational frac_hi = hi - Rational(fl);
  // lo, hi share the integer part; recurse on reciprocals.
  Rational inner = simplest_between(Rational(1) / frac_hi, Rational(1) / frac_lo);
  return Rational(fl) + Rational(1) / inner;
}

// Rounds x to the nearest multiple of 2^-bits.
inline Rational round_dyadic(const Rational& x, unsigned bits) {
  BigInt scale = 1;
  scale <<= bits;
  Rational scaled = x * Rational(scale) + Rational(1, 2);
  return Rational(scaled.floor(), scale);
}

struct DelsarteOptions {
  int cut_budget = 50;
  // Residual violation (max of F on S) at which cutting stops and the
  // verified f_0 shift takes over.
  double violation_tolerance = 1e-10;
  // Try small-denominator roundings of the certificate.
  bool simplify = true;
  unsigned cut_bits = 40;
};

struct DelsarteBound {
  Rational bound;
  ZonalExpansion certificate;  // normalized so that f_0 = 1
  int degree = 0;
  size_t grid_size = 0;
  int cut_rounds = 0;
  size_t cut_points = 0;
  Rational shift;  // amount subtracted from f_0 before normalization
  bool simplified = false;
};

namespace detail {

inline std::vector<Rational> equidistant(const Rational& lo, const Rational& hi, size_t count) {
  std::vector<Rational> pts;
  if (lo == hi || count <= 1) {
    pts.push_back(lo);
    return pts;
  }
  for (size_t j = 0; j < count; ++j)
    pts.push_back(lo + (hi - lo) * Rational(static_cast<long>(j), static_cast<long>(count - 1)));
  return pts;
}

// max of F on [l, r] by golden-section search in floating point.
inline double float_max(const Poly& f, double l, double r) {
  constexpr double g = 0.6180339887498949;
  double best = std::max(f.eval(l), f.eval(r));
  for (int seg = 0; seg < 8; ++seg) {
    double a = l + (r - l) * seg / 8.0, b = l + (r - l) * (seg + 1) / 8.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    for (int it = 0; it < 80; ++it) {
      if (f.eval(c) > f.eval(d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - g * (b - a);
      d = a + g * (b - a);
    }
    best = std::max(best, f.eval(0.5 * (a + b)));
  }
  return best;
}

inline bool certificate_valid(const Poly& f, const std::vector<Rational>& coeffs, const Rational& lo, const Rational& hi) {
  for (const auto& c : coeffs)
    if (c.sign() < 0) return false;
  return nonpositive_on_interval(f, lo, hi);
}

// Smallest verified delta in a doubling sequence (0 first) with
// F - delta <= 0 on [lo, hi]; nullopt if none below 1.
inline std::optional<Rational> verified_shift(const Poly& F, const Rational& lo, const Rational& hi,
                                              const Rational& width) {
  if (nonpositive_on_interval(F, lo, hi)) return Rational(0);
  double est = 0;
  for (const auto& g : root_free_gaps(F, lo, hi, width))
    if (g.sign > 0) est = std::max(est, float_max(F, g.left.to_double(), g.right.to_double()));
  Rational delta = Rational::from_double(std::max(est, 1e-300) * (1 + 1e-6));
  for (int attempt = 0; attempt < 200 && delta < Rational(1); ++attempt) {
    if (nonpositive_on_interval(F - Poly::constant(delta), lo, hi)) return delta;
    delta *= Rational(2);
  }
  return std::nullopt;
}

}  // namespace detail

inline DelsarteBound delsarte_lp_dual(const ZonalFamily& family, const Rational& lo, const Rational& hi, int degree,
                                      size_t grid_size, const DelsarteOptions& opts = {}) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");
  if (hi < lo) throw std::invalid_argument("interval lower bound exceeds upper bound");
  if (family.max_degree() >= 0 && degree > family.max_degree())
    throw std::invalid_argument("degree exceeds the zonal family");

  const auto phi = family.polys(degree);
  const size_t D = static_cast<size_t>(degree);
  std::vector<Rational> points = detail::equidistant(lo, hi, grid_size);
  std::set<Rational> seen(points.begin(), points.end());
  std::vector<std::vector<Rational>> columns;
  auto add_column = [&](const Rational& t) {
    std::vector<Rational> col(D);
    for (size_t k = 1; k <= D; ++k) col[k - 1] = phi[k](t);
    columns.push_back(std::move(col));
  };
  for (const auto& t : points) add_column(t);

  DelsarteBound out{Rational(), ZonalExpansion{family, {}}, degree, grid_size, 0, 0, Rational(), false};
  std::vector<Rational> f(D + 1);
  Poly F;
  bool feasible = false;
  const Rational width = (hi - lo) / Rational(BigInt(BigInt(1) << 36));

  for (int round = 0;; ++round) {
    LinearProgram<Rational> lp(columns.size(), Sense::maximize);
    for (auto& c : lp.objective) c = Rational(1);
    for (size_t k = 0; k < D; ++k) {
      std::vector<Rational> row(columns.size());
      for (size_t j = 0; j < columns.size(); ++j) row[j] = columns[j][k];
      lp.add(std::move(row), Relation::greater_equal, Rational(-1));
    }
    auto sol = simplex_solve(lp);
    if (sol.status != LPStatus::optimal)
      throw SolverError("no degree-" + std::to_string(degree) + " certificate exists on this interval (LP " +
                        to_string(sol.status) + ")");
    f[0] = Rational(1);
    F = Poly::constant(Rational(1));
    for (size_t k = 1; k <= D; ++k) {
      f[k] = -sol.dual_values[k - 1];
      if (!f[k].is_zero()) F += phi[k] * f[k];
    }
    out.cut_rounds = round;
    auto gaps = root_free_gaps(F, lo, hi, width);
    std::vector<const RootFreeGap*> bad;
    for (const auto& g : gaps)
      if (g.sign > 0) bad.push_back(&g);
    if (bad.empty()) {
      feasible = true;
      break;
    }
    double worst = 0;
    for (const auto* g : bad) worst = std::max(worst, detail::float_max(F, g->left.to_double(), g->right.to_double()));
    if (worst <= opts.violation_tolerance || round >= opts.cut_budget) break;
    size_t added = 0;
    for (const auto* g : bad) {
      Rational mid = (g->left + g->right) * Rational(1, 2);
      Rational cut = round_dyadic(mid, opts.cut_bits);
      if (!(g->left < cut && cut < g->right)) cut = mid;
      if (cut < lo || hi < cut || !seen.insert(cut).second) continue;
      add_column(cut);
      ++added;
    }
    out.cut_points += added;
    if (added == 0) break;
  }

  Rational shift;
  if (!feasible) {
    auto delta = detail::verified_shift(F, lo, hi, width);
    if (!delta) {
      std::string coeffs;
      for (const auto& c : f) coeffs += " " + c.to_decimal();
      throw SolverError("cut budget exhausted without a feasible certificate; best iterate f =" + coeffs);
    }
    shift = *delta;
  }

  const Rational f0 = Rational(1) - shift;
  std::vector<Rational> normalized(D + 1);
  Rational total;
  for (size_t k = 0; k <= D; ++k) {
    normalized[k] = (k == 0 ? f0 : f[k]) / f0;
    total += normalized[k];
  }
  out.shift = shift;
  out.bound = total;
  out.certificate.coeffs = normalized;

  if (opts.simplify) {
    // Small-denominator coefficients that keep the bound.
    for (int digits = 2; digits <= 10 && !out.simplified; ++digits) {
      const Rational tol = Rational(1) / Rational(BigInt(10)).pow(static_cast<unsigned>(digits));
      std::vector<Rational> g(D + 1);
      g[0] = Rational(1);
      Rational sum(1);
      for (size_t k = 1; k <= D; ++k) {
        Rational scale = std::max(Rational(1), normalized[k].abs());
        g[k] = simplest_between(normalized[k] - tol * scale, normalized[k] + tol * scale);
        sum += g[k];
      }
      if (out.bound < sum) continue;
      ZonalExpansion cand{family, g};
      if (detail::certificate_valid(cand.to_poly(), g, lo, hi)) {
        out.bound = sum;
        out.certificate.coeffs = g;
        out.simplified = true;
      }
    }
    // Otherwise trade a relative 1e-10 of the bound for short coefficients:
    // round f_k, re-verify with a shift delta, and rescale the non-constant
    // part by a simple s >= 1 / (1 - delta) so that 1 + s (F - 1) <= 0.
    for (int digits = 8; digits <= 16 && !out.simplified; digits += 2) {
      const Rational tol = Rational(1) / Rational(BigInt(10)).pow(static_cast<unsigned>(digits));
      std::vector<Rational> g(D + 1);
      g[0] = Rational(1);
      Poly G = Poly::constant(Rational(1));
      for (size_t k = 1; k <= D; ++k) {
        if (normalized[k].is_zero()) continue;
        Rational scale = std::max(Rational(1), normalized[k]);
        g[k] = simplest_between(std::max(Rational(0), normalized[k] - tol * scale), normalized[k] + tol * scale);
        if (!g[k].is_zero()) G += phi[k] * g[k];
      }
      auto delta = detail::verified_shift(G, lo, hi, width);
      if (!delta) continue;
      const Rational need = Rational(1) / (Rational(1) - *delta);
      const Rational s = simplest_between(need, need * (Rational(1) + tol));
      Rational sum(1);
      for (size_t k = 1; k <= D; ++k) {
        g[k] *= s;
        sum += g[k];
      }
      if (sum - out.bound > out.bound / Rational(BigInt(10)).pow(10)) continue;
      out.bound = sum;
      out.certificate.coeffs = g;
      out.simplified = true;
    }
  }
  return out;
}

// 1 + max sum(alpha) over distributions supported on `support` satisfying
// sum_i alpha_i Phi_k(tau_i) >= -1 for k = 0..degree. A lower estimate of the
// LP bound, not a code bound.
inline Rational delsarte_lp_primal_lower(const ZonalFamily& family, const Rational& lo, const Rational& hi, int degree,
                                         const std::vector<Rational>& support) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  for (const auto& t : support)
    if (t < lo || hi < t) throw std::invalid_argument("support point outside the interval");
  if (support.empty()) return Rational(1);
  LinearProgram<Rational> lp(support.size(), Sense::maximize);
  for (auto& c : lp.objective) c = Rational(1);
  for (int k = 0; k <= degree; ++k) {
    const Poly p = family.poly(k);
    std::vector<Rational> row;
    for (const auto& t : support) row.push_back(p(t));
    lp.add(std::move(row), Relation::greater_equal, Rational(-1));
  }
  auto sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal)
    throw SolverError(std::string("primal LP on the given support is ") + to_string(sol.status));
  return Rational(1) + sol.value;
}

struct TwoPointBound {
  Rational bound;
  ZonalExpansion certificate;
};

// min f(1) over f = sum_k f_k G_k^(n), f_0 = 1, f_k >= 0, f(a) <= 0, f(b) <= 0.
inline TwoPointBound two_point_lp(const ZonalFamily& family, const Rational& a, const Rational& b, int degree) {
  if (!(Rational(-1) <= b && b < a && a < Rational(1)))
    throw std::invalid_argument("two-point LP requires -1 <= b < a < 1");
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  const size_t nv = static_cast<size_t>(degree) + 1;
  LinearProgram<Rational> lp(nv, Sense::minimize);
  std::vector<Rational> unit(nv), at_a(nv), at_b(nv);
  unit[0] = Rational(1);
  for (size_t k = 0; k < nv; ++k) {
    const Poly p = family.poly(static_cast<int>(k));
    lp.objective[k] = p(family.tau0());
    at_a[k] = p(a);
    at_b[k] = p(b);
  }
  lp.add(unit, Relation::equal, Rational(1));
  lp.add(at_a, Relation::less_equal, Rational(0));
  lp.add(at_b, Relation::less_equal, Rational(0));
  auto sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal)
    throw SolverError(std::string("two-point LP is ") + to_string(sol.status));
  return {sol.value, ZonalExpansion{family, sol.assignment}};
}

inline TwoPointBound two_point_lp(int n, const Rational& a, const Rational& b, int degree) {
  return two_point_lp(ZonalFamily::gegenbauer(n), a, b, degree);
}

}  // namespace delsarte
