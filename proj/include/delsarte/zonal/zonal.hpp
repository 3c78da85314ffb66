#pragma once

// Zonal polynomial families: Gegenbauer polynomials G_k^(n) for the sphere
// S^{n-1} and normalized binary Krawtchouk polynomials for the Hamming space.
// Both are normalized so that Phi_k(tau0) = 1.

#include "delsarte/exactmath/poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

// G_k^(n) by the three-term recurrence
//   G_k = ((2k + n - 4) t G_{k-1} - (k - 1) G_{k-2}) / (k + n - 3).
// For n = 2 this is Chebyshev T_k (the k = 1 step is fixed to t).
inline std::vector<Poly> gegenbauer_table(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("gegenbauer dimension must be >= 2");
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Poly> g;
  g.push_back(Poly::constant(Rational(1)));
  if (max_degree >= 1) g.push_back(Poly::monomial(Rational(1), 1));
  const Poly t = Poly::monomial(Rational(1), 1);
  for (int k = 2; k <= max_degree; ++k) {
    Poly next = t * g[static_cast<size_t>(k - 1)] * Rational(2 * k + n - 4) -
                g[static_cast<size_t>(k - 2)] * Rational(k - 1);
    g.push_back(next * Rational(1, k + n - 3));
  }
  return g;
}

inline Poly gegenbauer_poly(int n, int k) {
  if (k < 0) throw std::invalid_argument("degree must be >= 0");
  return gegenbauer_table(n, k).back();
}

// Binary Krawtchouk K_k(t, n) = sum_j (-1)^j C(t, j) C(n - t, k - j),
// divided by K_k(0, n) = C(n, k).
inline Poly krawtchouk_poly(int n, int k) {
  if (n < 1) throw std::invalid_argument("krawtchouk length must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("krawtchouk degree must satisfy 0 <= k <= n");
  const Poly t = Poly::monomial(Rational(1), 1);
  // C(x, j) as a polynomial in x, where x = t or x = n - t.
  auto binom_poly = [](const Poly& x, int j) {
    Poly out = Poly::constant(Rational(1));
    for (int i = 0; i < j; ++i) out = out * (x - Poly::constant(Rational(i)));
    BigInt fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    return out * (Rational(1) / Rational(fact));
  };
  const Poly n_minus_t = Poly::constant(Rational(n)) - t;
  Poly sum;
  for (int j = 0; j <= k; ++j) {
    Poly term = binom_poly(t, j) * binom_poly(n_minus_t, k - j);
    sum += (j % 2 == 0) ? term : -term;
  }
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return sum * (Rational(1) / Rational(c));
}

class ZonalFamily {
 public:
  enum class Kind { gegenbauer, krawtchouk };

  static ZonalFamily gegenbauer(int n) {
    if (n < 2) throw std::invalid_argument("gegenbauer dimension must be >= 2");
    return ZonalFamily(Kind::gegenbauer, n);
  }
  static ZonalFamily krawtchouk(int n) {
    if (n < 1) throw std::invalid_argument("krawtchouk length must be >= 1");
    return ZonalFamily(Kind::krawtchouk, n);
  }

  Kind kind() const { return kind_; }
  int parameter() const { return n_; }
  // tau(x, x): 1 on the sphere (inner product), 0 in Hamming space (distance).
  Rational tau0() const { return kind_ == Kind::gegenbauer ? Rational(1) : Rational(0); }
  std::string name() const {
    return (kind_ == Kind::gegenbauer ? "gegenbauer(" : "krawtchouk(") + std::to_string(n_) + ")";
  }
  // Largest available degree, unbounded (-1) for Gegenbauer.
  int max_degree() const { return kind_ == Kind::krawtchouk ? n_ : -1; }

  // Phi_k, memoized. Thread-safe: concurrent readers, exclusive extension.
  Poly poly(int k) const {
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    if (kind_ == Kind::krawtchouk && k > n_)
      throw std::invalid_argument("krawtchouk degree must satisfy 0 <= k <= n");
    {
      std::shared_lock lock(cache_->mutex);
      if (static_cast<size_t>(k) < cache_->polys.size()) return cache_->polys[static_cast<size_t>(k)];
    }
    std::unique_lock lock(cache_->mutex);
    auto& polys = cache_->polys;
    if (kind_ == Kind::gegenbauer) {
      if (polys.size() <= static_cast<size_t>(k)) polys = gegenbauer_table(n_, std::max(k, 2 * static_cast<int>(polys.size())));
    } else {
      while (polys.size() <= static_cast<size_t>(k)) polys.push_back(krawtchouk_poly(n_, static_cast<int>(polys.size())));
    }
    return polys[static_cast<size_t>(k)];
  }

  std::vector<Poly> polys(int max_degree) const {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(max_degree + 1));
    for (int k = 0; k <= max_degree; ++k) out.push_back(poly(k));
    return out;
  }

  friend bool operator==(const ZonalFamily& a, const ZonalFamily& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::vector<Poly> polys;
  };
  ZonalFamily(Kind kind, int n) : kind_(kind), n_(n), cache_(std::make_shared<Cache>()) {}

  Kind kind_;
  int n_;
  std::shared_ptr<Cache> cache_;
};

// f(t) = sum_k coeffs[k] Phi_k(t).
struct ZonalExpansion {
  ZonalFamily family;
  std::vector<Rational> coeffs;

  Poly to_poly() const {
    Poly out;
    for (size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) out += family.poly(static_cast<int>(k)) * coeffs[k];
    return out;
  }
  Rational coeff(size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(); }
  // f(tau0) = sum of the coefficients.
  Rational value_at_tau0() const {
    Rational s;
    for (const auto& c : coeffs) s += c;
    return s;
  }
};

// Exact change of basis by back-substitution on the triangular system
// (deg Phi_k = k).
inline ZonalExpansion expand_in_zonal_basis(const Poly& p, const ZonalFamily& family) {
  ZonalExpansion out{family, {}};
  if (p.is_zero()) return out;
  const int d = p.degree();
  if (family.max_degree() >= 0 && d > family.max_degree())
    throw std::invalid_argument("polynomial degree exceeds the zonal family");
  out.coeffs.assign(static_cast<size_t>(d + 1), Rational());
  std::vector<Rational> rest = p.coeffs();
  for (int k = d; k >= 0; --k) {
    const Poly phi = family.poly(k);
    Rational c = rest[static_cast<size_t>(k)] / phi.leading();
    out.coeffs[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= k; ++j) rest[static_cast<size_t>(j)] -= c * phi.coeff(static_cast<size_t>(j));
  }
  return out;
}

}  // namespace delsarte
