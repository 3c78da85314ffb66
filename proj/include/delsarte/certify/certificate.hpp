#pragma once

// Delsarte certificates: a polynomial f that is positive definite on
// S^{n-1} (all Gegenbauer coefficients f_k >= 0, f_0 > 0) and nonpositive on
// [-1, z]. Any spherical code with inner products <= z then has at most
// f(1) / f_0 points.

#include "delsarte/exactmath/sturm.hpp"
#include "delsarte/zonal/zonal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

struct Certificate {
  std::string name;
  int dimension = 2;
  Rational cos_threshold;
  Poly polynomial;  // monomial basis
  std::optional<Rational> claimed_bound;

  void validate() const {
    if (dimension < 2) throw std::invalid_argument("certificate dimension must be >= 2");
    if (cos_threshold < Rational(-1) || !(cos_threshold < Rational(1)))
      throw std::invalid_argument("cosine threshold must satisfy -1 <= z < 1");
  }
};

enum class Verdict { valid, invalid };

enum class ClaimStatus { none, equal, weaker, stronger };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::none: return "none";
    case ClaimStatus::equal: return "equal";
    case ClaimStatus::weaker: return "weaker";      // claim >= computed bound
    case ClaimStatus::stronger: return "stronger";  // claim < computed bound
  }
  return "?";
}

struct VerificationReport {
  ZonalExpansion expansion;
  bool all_fk_nonneg = false;
  Rational f0;
  bool sign_ok = false;
  std::optional<Rational> witness;  // point of [-1, z] where f > 0
  std::optional<Rational> bound_value;  // f(1) / f0 when f0 > 0
  std::optional<BigInt> integer_bound;
  Verdict verdict = Verdict::invalid;
  std::string reason;  // empty when valid
  ClaimStatus claim = ClaimStatus::none;

  bool valid() const { return verdict == Verdict::valid; }
};

inline VerificationReport verify_certificate(const Certificate& cert) {
  cert.validate();
  if (cert.polynomial.is_zero()) throw std::invalid_argument("certificate polynomial is zero");
  auto family = ZonalFamily::gegenbauer(cert.dimension);
  VerificationReport r{expand_in_zonal_basis(cert.polynomial, family)};
  r.f0 = r.expansion.coeff(0);
  r.all_fk_nonneg = true;
  for (const auto& c : r.expansion.coeffs) r.all_fk_nonneg = r.all_fk_nonneg && c.sign() >= 0;
  auto sign = check_nonpositive(cert.polynomial, Rational(-1), cert.cos_threshold);
  r.sign_ok = sign.nonpositive;
  r.witness = sign.witness;
  if (r.f0.sign() > 0) {
    r.bound_value = cert.polynomial(Rational(1)) / r.f0;
    r.integer_bound = r.bound_value->floor();
  }
  // Reason precedence: sign violation (it carries a witness), then f0, then
  // the remaining coefficients.
  if (!r.sign_ok) {
    r.reason = "positive on forbidden interval";
  } else if (r.f0.sign() <= 0) {
    r.reason = "f0 not positive";
  } else if (!r.all_fk_nonneg) {
    r.reason = "not positive definite";
  }
  r.verdict = r.reason.empty() ? Verdict::valid : Verdict::invalid;
  if (cert.claimed_bound && r.bound_value) {
    if (*cert.claimed_bound == *r.bound_value)
      r.claim = ClaimStatus::equal;
    else
      r.claim = *r.bound_value < *cert.claimed_bound ? ClaimStatus::weaker : ClaimStatus::stronger;
  }
  return r;
}

// The largest integer M with f0 * M < c, i.e. the size bound implied by
// f0 M^2 <= S(X) < c M.
inline BigInt extension_bound(const Rational& f0, const Rational& linear_constant) {
  if (f0.sign() <= 0 || linear_constant.sign() <= 0)
    throw std::invalid_argument("extension bound needs positive f0 and constant");
  return (linear_constant / f0).ceil() - 1;
}

namespace builtin {

inline Poly from_roots(const Rational& lead, const std::vector<std::pair<Rational, unsigned>>& roots) {
  Poly p = Poly::constant(lead);
  for (const auto& [r, mult] : roots) p *= Poly::linear_factor(r).pow(mult);
  return p;
}

inline Poly from_coeffs(const std::vector<const char*>& ascending) {
  std::vector<Rational> c;
  for (const char* s : ascending) c.push_back(Rational::parse(s));
  return Poly(std::move(c));
}

}  // namespace builtin

// The five explicit polynomials: f8 and f24 (Levenshtein / Odlyzko-Sloane,
// tight in dimensions 8 and 24), f_OS (Odlyzko-Sloane, dimension 4, stored
// through its printed Gegenbauer coefficients), and f4, f3 which pair
// f_0 M^2 <= S(X) with an external bound S(X) < cM and carry no claim here.
inline std::vector<Certificate> builtin_certificates() {
  using builtin::from_coeffs;
  using builtin::from_roots;
  const Rational half(1, 2), quarter(1, 4);
  std::vector<Certificate> out;
  out.push_back({"f8", 8, half,
                 from_roots(Rational(1), {{half, 1}, {Rational(0), 2}, {-half, 2}, {Rational(-1), 1}}),
                 Rational(240)});
  out.push_back({"f24", 24, half,
                 from_roots(Rational(1), {{half, 1},
                                          {quarter, 2},
                                          {Rational(0), 2},
                                          {-quarter, 2},
                                          {-half, 2},
                                          {Rational(-1), 1}}),
                 Rational(196560)});
  {
    ZonalExpansion os{ZonalFamily::gegenbauer(4),
                      {Rational(1), Rational::parse("3.6181"), Rational::parse("6.1156"), Rational::parse("7.0393"),
                       Rational::parse("5.0199"), Rational::parse("2.313"), Rational(0), Rational(0), Rational(0),
                       Rational::parse("0.4525")}};
    out.push_back({"f_OS", 4, half, os.to_poly(), Rational::parse("25.5584")});
  }
  out.push_back({"f4", 4, half,
                 from_coeffs({"-2/125", "-217/500", "-516/125", "-1229/125", "2048/125", "1764/25", "0", "-2688/25",
                              "0", "1344/25"}),
                 std::nullopt});
  out.push_back({"f3", 3, half,
                 from_coeffs({"-1/200", "1/10", "-213/100", "-83/10", "343/40", "18333/400", "0", "-1287/20", "0",
                              "2431/80"}),
                 std::nullopt});
  return out;
}

inline Certificate builtin_certificate(const std::string& name) {
  for (auto& c : builtin_certificates())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown built-in certificate '" + name + "'");
}

}  // namespace delsarte
