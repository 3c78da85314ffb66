#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always stored in canonical form: positive denominator and
// numerator/denominator coprime. Zero is 0/1.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdio>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delsarte {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(BigInt(std::to_string(v), 10)) {}  // NOLINT
  Rational(unsigned v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  // Exact binary value of a finite double.
  static Rational from_double(double d) {
    if (d != d || d - d != 0) throw std::domain_error("non-finite double");
    Rational r;
    r.value_ = mpq_class(d);
    return r;
  }

  // Accepts "p", "p/q", and decimals "d.ddd" with optional exponent
  // ("1.5e-3"). Decimals map to denominators that are powers of ten.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  // Always "p/q", integers included ("240/1").
  std::string to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }
  // 15 significant digits, suitable for human-readable reports.
  std::string to_decimal(int digits = 15) const;

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  Rational abs() const { return Rational(::abs(value_)); }
  Rational pow(unsigned e) const {
    Rational out(1);
    Rational base = *this;
    while (e) {
      if (e & 1U) out *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return out;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  auto parse_int = [&](const std::string& part) -> BigInt {
    if (part.empty()) fail();
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) fail();
    for (size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) fail();
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    BigInt ex = parse_int(s.substr(e + 1));
    if (!ex.fits_slong_p() || ex > 10000 || ex < -10000) fail();
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      fail();
    }
  }
  if (digits.empty()) fail();
  BigInt num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale >= 0 ? Rational(BigInt(num * ten_pow)) : Rational(num, ten_pow);
}

inline std::string Rational::to_decimal(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double());
  return buf;
}

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace delsarte
