#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include "delsarte/exactmath/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace delsarte {

class Poly {
 public:
  Poly() = default;
  // Ascending coefficients: coeffs[i] multiplies t^i.
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(const Rational& c, size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }
  // t - r
  static Poly linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const Rational& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }
  double eval(double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + static_cast<long double>(it->to_double());
    return static_cast<double>(acc);
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly out = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

inline Poly poly_arith(const Poly& lhs, const Poly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add: return lhs + rhs;
    case PolyOp::sub: return lhs - rhs;
    case PolyOp::mul: return lhs * rhs;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

inline Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }

// Euclidean division: num = q * den + r with deg r < deg den.
inline std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Poly(), num};
  std::vector<Rational> quot(static_cast<size_t>(num.degree() - dd + 1));
  const Rational& lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    Rational c = rem[static_cast<size_t>(i)] / lead;
    quot[static_cast<size_t>(i - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= c * den.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

// p / gcd(p, p'): same distinct roots, all simple.
inline Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

inline std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string mag = c.abs().is_integer() ? c.abs().numerator().get_str() : c.abs().to_string();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = c.abs() == Rational(1);
    if (i == 0) {
      out += mag;
    } else {
      if (!unit) out += mag + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace delsarte
