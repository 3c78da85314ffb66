#pragma once

// Power sums and the Hankel-type blocks R_m, F_m^+(a), F_m^-(b) whose joint
// positive semidefiniteness characterizes point multisets inside [a, b].

#include "delsarte/sylvester/psd.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

struct PowerSums {
  std::vector<Rational> values;  // s_0, ..., s_{2m-1}

  // s_k = sum_i t_i^k for k < 2m.
  static PowerSums of(std::span<const Rational> points, int m) {
    if (m < 1) throw std::invalid_argument("block order m must be >= 1");
    PowerSums out;
    out.values.assign(static_cast<size_t>(2 * m), Rational());
    for (const auto& t : points) {
      Rational p(1);
      for (auto& s : out.values) {
        s += p;
        p *= t;
      }
    }
    return out;
  }

  int order() const { return static_cast<int>(values.size() / 2); }

  // s_k / s_0, so that the leading entry is 1.
  PowerSums normalized() const {
    if (values.empty() || values[0].sign() <= 0) throw std::invalid_argument("normalization needs s_0 > 0");
    PowerSums out;
    for (const auto& s : values) out.values.push_back(s / values[0]);
    return out;
  }
};

struct MomentBlocks {
  Matrix<Rational> R;
  Matrix<Rational> Fplus;
  Matrix<Rational> Fminus;
  Rational a;
  Rational b;

  bool psd(PsdMode mode = PsdMode::exact, double tol = 1e-9) const {
    return psd_check(R, mode, tol) && psd_check(Fplus, mode, tol) && psd_check(Fminus, mode, tol);
  }
};

inline MomentBlocks build_moment_blocks(const PowerSums& s, const Rational& a, const Rational& b) {
  if (s.values.size() % 2 != 0) throw std::invalid_argument("power-sum list must have even length");
  if (s.values.empty()) throw std::invalid_argument("power-sum list must be nonempty");
  const size_t m = s.values.size() / 2;
  MomentBlocks out{Matrix<Rational>(m, std::vector<Rational>(m)), Matrix<Rational>(m, std::vector<Rational>(m)),
                   Matrix<Rational>(m, std::vector<Rational>(m)), a, b};
  const auto& v = s.values;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      out.R[i][j] = v[i + j];
      out.Fplus[i][j] = v[i + j + 1] - a * v[i + j];
      out.Fminus[i][j] = b * v[i + j] - v[i + j + 1];
    }
  return out;
}

inline bool sylvester_forward_check(std::span<const Rational> points, const Rational& a, const Rational& b, int m) {
  if (b < a) throw std::invalid_argument("interval lower bound exceeds upper bound");
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] < a || points[i] > b)
      throw std::invalid_argument("point " + std::to_string(i) + " lies outside the interval");
  return build_moment_blocks(PowerSums::of(points, m), a, b).psd(PsdMode::exact);
}

}  // namespace delsarte
