#pragma once

// Partition vectors omega in W_d, the tuple counts q_omega(N), and the
// code-size bound f_0 N^{m+1} <= sum_{omega in W_{m+2}} B_omega q_omega(N).

#include "delsarte/exactmath/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

class PartitionVector {
 public:
  PartitionVector() = default;
  explicit PartitionVector(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  const std::vector<int>& parts() const { return parts_; }
  int total() const {
    int d = 0;
    for (int p : parts_) d += p;
    return d;
  }
  size_t length() const { return parts_.size(); }
  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }
  friend auto operator<=>(const PartitionVector&, const PartitionVector&) = default;

 private:
  std::vector<int> parts_;
};

// W_d in reverse lexicographic order: (d), (d-1,1), ..., (1,...,1).
inline std::vector<PartitionVector> partitions_of(int d) {
  if (d < 1) throw std::invalid_argument("partition total must be >= 1");
  std::vector<PartitionVector> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// q_omega(N) = qtilde_omega(N) / N with
//   qtilde_omega(N) = d! / (prod_r i_r! * prod_s m_s!) * N (N-1) ... (N-k+1),
// m_s the multiplicity of part size s. Polynomial in N of degree d - 1.
inline Poly q_omega(const PartitionVector& omega) {
  BigInt num = 1;
  for (int i = 2; i <= omega.total(); ++i) num *= i;
  BigInt den = 1;
  std::map<int, int> mult;
  for (int p : omega.parts()) {
    for (int i = 2; i <= p; ++i) den *= i;
    ++mult[p];
  }
  for (auto [size, m] : mult)
    for (int i = 2; i <= m; ++i) den *= i;
  // N (N-1) ... (N-k+1) / N = (N-1) ... (N-k+1)
  Poly p = Poly::constant(Rational(num, den));
  for (size_t i = 1; i < omega.length(); ++i) p *= Poly::linear_factor(Rational(static_cast<long>(i)));
  return p;
}

inline Rational q_omega(const PartitionVector& omega, long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  return q_omega(omega)(Rational(N));
}

// psi(J): sizes of the maximal blocks of equal entries, sorted decreasing.
inline PartitionVector equality_pattern(const std::vector<long>& J) {
  std::map<long, int> counts;
  for (long j : J) ++counts[j];
  std::vector<int> sizes;
  for (auto [v, c] : counts) sizes.push_back(c);
  std::sort(sizes.rbegin(), sizes.rend());
  return PartitionVector(std::move(sizes));
}

// Counts J in {1..N}^d with psi(J) = omega by enumeration, divided by N.
inline Rational q_omega_bruteforce(const PartitionVector& omega, long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const int d = omega.total();
  double size = std::pow(static_cast<double>(N), d);
  if (size > 1e7) throw std::invalid_argument("enumeration too large (N^d > 1e7)");
  std::vector<long> J(static_cast<size_t>(d), 1);
  long count = 0;
  while (true) {
    if (equality_pattern(J) == omega) ++count;
    size_t pos = 0;
    while (pos < J.size() && J[pos] == N) J[pos++] = 1;
    if (pos == J.size()) break;
    ++J[pos];
  }
  return Rational(count, N);
}

class VacuousBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest integer N >= 1 with f0 N^{m+1} <= sum_omega B_omega q_omega(N);
// 0 if no positive N satisfies it.
inline std::int64_t theorem62_max_N(const Rational& f0, int m, const std::map<PartitionVector, Rational>& B) {
  if (f0.sign() <= 0) throw std::invalid_argument("f0 must be positive");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const auto W = partitions_of(m + 2);
  Poly P = -Poly::monomial(f0, static_cast<size_t>(m + 1));
  for (const auto& omega : W) {
    auto it = B.find(omega);
    if (it == B.end()) throw std::invalid_argument("missing B value for omega = " + omega.to_string());
    P += q_omega(omega) * it->second;
  }
  for (const auto& [omega, value] : B)
    if (omega.total() != m + 2) throw std::invalid_argument("B value for omega outside W_{m+2}: " + omega.to_string());
  if (P.is_zero() || P.leading().sign() > 0) throw VacuousBound("bound is vacuous");
  if (P.degree() == 0) return 0;  // constant negative

  // P < 0 beyond its largest root and has constant sign between roots, so the
  // answer is an exact root or ceil(r) - 1 for some root r.
  const Rational R = cauchy_root_bound(P);
  std::vector<BigInt> candidates{BigInt(1)};
  for (const auto& r : isolate_roots(P, Rational(1), R + Rational(1), Rational(1, 4)))
    for (BigInt k = r.hi.floor(); k >= r.lo.floor() - 1; k -= 1) candidates.push_back(k);
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  for (const auto& n : candidates) {
    if (n < 1) break;
    if (P(Rational(n)).sign() >= 0) {
      if (!n.fits_slong_p()) throw std::overflow_error("code-size bound exceeds 64 bits");
      return n.get_si();
    }
  }
  return 0;
}

}  // namespace delsarte
