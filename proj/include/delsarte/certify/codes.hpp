#pragma once

// Explicit spherical codes: separation checks and distance distributions.

#include "delsarte/exactmath/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

struct CodePointSet {
  std::vector<std::vector<double>> points;
  double tolerance = 1e-9;

  size_t dimension() const { return points.empty() ? 0 : points.front().size(); }

  void validate() const {
    for (size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != dimension())
        throw std::invalid_argument("point " + std::to_string(i) + " has the wrong dimension");
      double norm2 = 0;
      for (double x : points[i]) norm2 += x * x;
      if (std::abs(std::sqrt(norm2) - 1) > tolerance)
        throw std::invalid_argument("point " + std::to_string(i) + " is not a unit vector");
    }
  }
};

inline double inner_product(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct CodeViolation {
  size_t i, j;
  double inner;
};

struct CodeValidation {
  bool valid = true;
  size_t size = 0;
  std::vector<CodeViolation> violations;
};

inline CodeValidation validate_code(const CodePointSet& code, double cos_threshold) {
  code.validate();
  CodeValidation out;
  out.size = code.points.size();
  for (size_t i = 0; i < code.points.size(); ++i)
    for (size_t j = i + 1; j < code.points.size(); ++j) {
      double ip = inner_product(code.points[i], code.points[j]);
      if (ip > cos_threshold + code.tolerance) out.violations.push_back({i, j, ip});
    }
  out.valid = out.violations.empty();
  return out;
}

struct DistanceBin {
  double value;    // representative inner product of the bin
  Rational alpha;  // ordered pairs in the bin / |C|
  size_t pairs;
};

// alpha_t over ordered pairs, diagonal included, sorted by decreasing t.
// Inner products within bin_tolerance of their neighbour share a bin.
inline std::vector<DistanceBin> distance_distribution(const CodePointSet& code, double bin_tolerance = 1e-9) {
  code.validate();
  const size_t M = code.points.size();
  std::vector<double> ips;
  ips.reserve(M * M);
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < M; ++j) ips.push_back(i == j ? 1.0 : inner_product(code.points[i], code.points[j]));
  std::sort(ips.begin(), ips.end(), std::greater<>());
  std::vector<DistanceBin> bins;
  size_t start = 0;
  for (size_t k = 1; k <= ips.size(); ++k) {
    if (k == ips.size() || ips[k - 1] - ips[k] > bin_tolerance) {
      double sum = 0;
      for (size_t q = start; q < k; ++q) sum += ips[q];
      size_t count = k - start;
      bins.push_back({sum / static_cast<double>(count),
                      Rational(static_cast<long>(count), static_cast<long>(M)), count});
      start = k;
    }
  }
  return bins;
}

// Exact variant for rational coordinates on a common sphere (e.g. the 24-cell
// as (±1, ±1, 0, 0)); inner products are divided by the common squared norm.
inline std::map<Rational, Rational> distance_distribution_exact(const std::vector<std::vector<Rational>>& points) {
  std::map<Rational, Rational> out;
  if (points.empty()) return out;
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  const Rational r2 = dot(points[0], points[0]);
  if (r2.is_zero()) throw std::invalid_argument("zero vector in code");
  for (size_t i = 0; i < points.size(); ++i)
    if (dot(points[i], points[i]) != r2) throw std::invalid_argument("point " + std::to_string(i) + " has a different norm");
  const Rational m(static_cast<long>(points.size()));
  for (const auto& p : points)
    for (const auto& q : points) out[dot(p, q) / r2] += Rational(1) / m;
  return out;
}

}  // namespace delsarte
