#pragma once

// Multivariate Gegenbauer kernels
//   G_k^(n,m)(t, u, v) = (1-|u|^2)^{k/2} (1-|v|^2)^{k/2}
//                        G_k^(n-m)((t - <u,v>) / sqrt((1-|u|^2)(1-|v|^2))).
// Every monomial x^j of G_k^(n-m) has j = k mod 2, so each term becomes
// c_j (t - <u,v>)^j ((1-|u|^2)(1-|v|^2))^{(k-j)/2} with an integer exponent.
// That form stays finite on |u| = 1 or |v| = 1.

#include "delsarte/zonal/zonal.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace delsarte {

class MultiKernelSpec {
 public:
  MultiKernelSpec(int n, int m, int k) : n_(n), m_(m), k_(k) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    if (m < 0 || m > n - 2) throw std::invalid_argument("anchor count must satisfy 0 <= m <= n - 2");
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
  }
  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return k_; }

 private:
  int n_, m_, k_;
};

inline double multivariate_gegenbauer_eval(const MultiKernelSpec& spec, double t, std::span<const double> u,
                                           std::span<const double> v) {
  if (u.size() != static_cast<size_t>(spec.m()) || v.size() != static_cast<size_t>(spec.m()))
    throw std::invalid_argument("anchor vectors must have length m");
  double uu = 0, vv = 0, uv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    uu += u[i] * u[i];
    vv += v[i] * v[i];
    uv += u[i] * v[i];
  }
  constexpr double slack = 1e-12;
  if (uu > 1 + slack || vv > 1 + slack) throw std::domain_error("anchor vector norm exceeds 1");
  const double w = std::max(0.0, 1 - uu) * std::max(0.0, 1 - vv);
  const double x = t - uv;
  const Poly g = gegenbauer_poly(spec.n() - spec.m(), spec.k());
  double sum = 0;
  for (int j = spec.k(); j >= 0; j -= 2) {
    double c = g.coeff(static_cast<size_t>(j)).to_double();
    if (c == 0) continue;
    sum += c * std::pow(x, j) * std::pow(w, (spec.k() - j) / 2);
  }
  return sum;
}

}  // namespace delsarte
