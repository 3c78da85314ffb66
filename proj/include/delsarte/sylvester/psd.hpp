#pragma once

// Positive semidefiniteness of symmetric matrices, exactly over the
// rationals or by an eigenvalue floor in floating point.

#include "delsarte/exactmath/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace delsarte {

template <class T>
using Matrix = std::vector<std::vector<T>>;

enum class PsdMode { exact, floating };

namespace detail {

template <class T>
void require_square(const Matrix<T>& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

}  // namespace detail

inline bool is_symmetric(const Matrix<Rational>& a) {
  detail::require_square(a);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

inline bool is_symmetric(const Matrix<double>& a, double tol = 0) {
  detail::require_square(a);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      double scale = std::max({1.0, std::abs(a[i][j]), std::abs(a[j][i])});
      if (std::abs(a[i][j] - a[j][i]) > tol * scale) return false;
    }
  return true;
}

// Symmetric elimination with diagonal pivoting. A negative pivot means not
// PSD; once every remaining diagonal entry is zero the trailing block must
// vanish entirely, otherwise some 2x2 principal minor is negative.
inline bool psd_check(Matrix<Rational> a) {
  if (!is_symmetric(a)) throw std::invalid_argument("matrix is not symmetric");
  std::vector<size_t> live(a.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  while (!live.empty()) {
    size_t best = live.size();
    for (size_t q = 0; q < live.size(); ++q) {
      const auto& d = a[live[q]][live[q]];
      if (d.sign() < 0) return false;
      if (d.sign() > 0 && (best == live.size() || a[live[best]][live[best]] < d)) best = q;
    }
    if (best == live.size()) {
      for (size_t r : live)
        for (size_t c : live)
          if (!a[r][c].is_zero()) return false;
      return true;
    }
    const size_t p = live[best];
    live.erase(live.begin() + static_cast<long>(best));
    const Rational inv = Rational(1) / a[p][p];
    for (size_t r : live) {
      if (a[r][p].is_zero()) continue;
      const Rational factor = a[r][p] * inv;
      for (size_t c : live) a[r][c] -= factor * a[p][c];
    }
  }
  return true;
}

inline Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
  return m;
}

inline Matrix<double> to_double(const Matrix<Rational>& a) {
  Matrix<double> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) out[i].push_back(x.to_double());
  return out;
}

inline double min_eigenvalue(const Matrix<double>& a) {
  detail::require_square(a);
  if (a.empty()) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// Floating mode: smallest eigenvalue >= -tol.
inline bool psd_check(const Matrix<double>& a, double tol) {
  if (!is_symmetric(a, 1e-12)) throw std::invalid_argument("matrix is not symmetric");
  return min_eigenvalue(a) >= -tol;
}

inline bool psd_check(const Matrix<Rational>& a, PsdMode mode, double tol = 1e-9) {
  if (mode == PsdMode::exact) return psd_check(a);
  if (!is_symmetric(a)) throw std::invalid_argument("matrix is not symmetric");
  return psd_check(to_double(a), tol);
}

}  // namespace delsarte
