#pragma once

// Gram-feasible configurations x = {x_ij} and the positive-definite class
// checks used by the multivariate bound.

#include "delsarte/certify/partitions.hpp"
#include "delsarte/sylvester/psd.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

// A(x): symmetric d x d with unit diagonal.
struct GramCandidate {
  Matrix<double> x;

  size_t size() const { return x.size(); }

  void validate(double tol = 1e-12) const {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].size() != x.size()) throw std::invalid_argument("Gram candidate is not square");
      if (std::abs(x[i][i] - 1) > tol) throw std::invalid_argument("diagonal entry " + std::to_string(i) + " is not 1");
    }
    if (!is_symmetric(x, tol)) throw std::invalid_argument("Gram candidate is not symmetric");
  }

  // Every off-diagonal entry equals 1 or lies in the closed range [-1, cos_theta].
  bool in_X(double cos_theta, double tol = 1e-12) const {
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = i + 1; j < x.size(); ++j) {
        const double v = x[i][j];
        if (std::abs(v - 1) <= tol) continue;
        if (v < -1 - tol || v > cos_theta + tol) return false;
      }
    return true;
  }

  // J(x): j_k = smallest i < k with x_ik = 1, else k (1-based labels).
  std::vector<long> labels(double tol = 1e-12) const {
    std::vector<long> J(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
      J[k] = static_cast<long>(k + 1);
      for (size_t i = 0; i < k; ++i)
        if (std::abs(x[i][k] - 1) <= tol) {
          J[k] = static_cast<long>(i + 1);
          break;
        }
    }
    return J;
  }

  PartitionVector pattern(double tol = 1e-12) const { return equality_pattern(labels(tol)); }

  // x in D_omega(theta): in X(theta), pattern omega, A(x) PSD within psd_tol.
  bool in_domain(const PartitionVector& omega, double cos_theta, double psd_tol = 1e-9) const {
    validate();
    return in_X(cos_theta) && pattern() == omega && psd_check(x, psd_tol);
  }
};

struct PdTerm {
  int degree = 0;
  Matrix<Rational> coefficients;  // M_k over a monomial basis h(u)
};

// F(t, u, v) = sum_k h(u)^T M_k h(v) G_k^{(n,m)}(t, u, v) is positive definite
// when every M_k is PSD; checked exactly. The orthonormalizing change of
// variables for u, v is the caller's responsibility.
inline bool verify_pd_expansion(int m, const std::vector<PdTerm>& terms) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  for (const auto& term : terms) {
    if (term.degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (!is_symmetric(term.coefficients))
      throw std::invalid_argument("coefficient matrix for degree " + std::to_string(term.degree) + " is not symmetric");
  }
  for (const auto& term : terms)
    if (!psd_check(term.coefficients)) return false;
  return true;
}

}  // namespace delsarte
