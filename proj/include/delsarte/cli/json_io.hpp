#pragma once

// JSON serialization: certificates, verification reports, LPs and run
// results. Rationals are written as "p/q" strings; report fields pair them
// with a 15-digit decimal and an exactness flag.

#include "delsarte/certify/certificate.hpp"
#include "delsarte/lpsolve/delsarte_lp.hpp"
#include "delsarte/sylvester/sdp0.hpp"
#include "delsarte/twodist/twodist.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace delsarte {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline Json exact_value(const Rational& r) {
  return Json{{"value", r.to_string()}, {"decimal", r.to_decimal()}, {"exact", true}};
}

inline Json exact_value(const BigInt& z) {
  return Json{{"value", z.get_str()}, {"decimal", z.get_str()}, {"exact", true}};
}

inline Json float_value(double v) {
  return Json{{"value", format_double(v)}, {"decimal", format_double(v)}, {"exact", false}};
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string \"p/q\" or an integer");
}

inline Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json certificate_to_json(const Certificate& c) {
  Json j;
  j["name"] = c.name;
  j["dimension"] = c.dimension;
  j["cos_threshold"] = c.cos_threshold.to_string();
  j["coefficients"] = rational_list(c.polynomial.coeffs());
  j["claimed_bound"] = c.claimed_bound ? Json(c.claimed_bound->to_string()) : Json(nullptr);
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  for (const char* key : {"dimension", "cos_threshold", "coefficients"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("certificate is missing \"") + key + "\"");
  Certificate c;
  c.name = j.value("name", std::string("unnamed"));
  if (!j["dimension"].is_number_integer()) throw std::invalid_argument("\"dimension\" must be an integer");
  c.dimension = j["dimension"].get<int>();
  c.cos_threshold = rational_from_json(j["cos_threshold"]);
  if (!j["coefficients"].is_array()) throw std::invalid_argument("\"coefficients\" must be an array");
  std::vector<Rational> coeffs;
  for (const auto& x : j["coefficients"]) coeffs.push_back(rational_from_json(x));
  c.polynomial = Poly(std::move(coeffs));
  if (j.contains("claimed_bound") && !j["claimed_bound"].is_null()) c.claimed_bound = rational_from_json(j["claimed_bound"]);
  c.validate();
  return c;
}

inline Json expansion_to_json(const ZonalExpansion& e) {
  return Json{{"family", e.family.name()}, {"coefficients", rational_list(e.coeffs)}};
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = r.valid() ? "valid" : "invalid";
  j["reason"] = r.reason.empty() ? Json(nullptr) : Json(r.reason);
  j["expansion"] = expansion_to_json(r.expansion);
  j["all_fk_nonneg"] = r.all_fk_nonneg;
  j["f0"] = exact_value(r.f0);
  j["sign_ok"] = r.sign_ok;
  j["witness"] = r.witness ? exact_value(*r.witness) : Json(nullptr);
  j["bound_value"] = r.bound_value ? exact_value(*r.bound_value) : Json(nullptr);
  j["integer_bound"] = r.integer_bound ? exact_value(*r.integer_bound) : Json(nullptr);
  j["claim"] = to_string(r.claim);
  return j;
}

template <class T>
Json scalar_to_json(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) return x.to_string();
  else return format_double(x);
}

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

template <class T>
Json lp_to_json(const LinearProgram<T>& lp) {
  Json j;
  j["sense"] = lp.sense == Sense::maximize ? "maximize" : "minimize";
  Json obj = Json::array();
  for (const auto& c : lp.objective) obj.push_back(scalar_to_json(c));
  j["objective"] = obj;
  Json rows = Json::array();
  for (const auto& c : lp.constraints) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs) coeffs.push_back(scalar_to_json(x));
    rows.push_back(Json{{"coefficients", coeffs}, {"relation", to_string(c.relation)}, {"rhs", scalar_to_json(c.rhs)}});
  }
  j["constraints"] = rows;
  Json bounds = Json::array();
  for (size_t i = 0; i < lp.num_vars(); ++i)
    bounds.push_back(Json{{"lower", lp.lower[i] ? scalar_to_json(*lp.lower[i]) : Json(nullptr)},
                          {"upper", lp.upper[i] ? scalar_to_json(*lp.upper[i]) : Json(nullptr)}});
  j["bounds"] = bounds;
  return j;
}

template <class T>
Json lp_solution_to_json(const LPSolution<T>& s) {
  Json j;
  j["status"] = to_string(s.status);
  j["value"] = scalar_to_json(s.value);
  Json a = Json::array(), d = Json::array();
  for (const auto& x : s.assignment) a.push_back(scalar_to_json(x));
  for (const auto& x : s.dual_values) d.push_back(scalar_to_json(x));
  j["assignment"] = a;
  j["dual_values"] = d;
  j["pivots"] = s.pivots;
  return j;
}

inline Json delsarte_bound_to_json(const DelsarteBound& b) {
  Json j;
  j["bound"] = exact_value(b.bound);
  j["integer_bound"] = exact_value(b.bound.floor());
  j["certificate"] = expansion_to_json(b.certificate);
  j["shift"] = exact_value(b.shift);
  j["simplified"] = b.simplified;
  return j;
}

inline Json sdp0_to_json(const SDP0Result& r) {
  Json j;
  j["y_star"] = float_value(r.y_star);
  j["bound"] = float_value(r.bound);
  j["y_exact"] = r.y_exact ? exact_value(*r.y_exact) : Json(nullptr);
  j["bound_exact"] = r.bound_exact ? exact_value(*r.bound_exact) : Json(nullptr);
  j["iterations"] = r.iterations;
  j["cuts"] = r.cuts;
  j["eigenvalue_floor"] = float_value(r.eigenvalue_floor);
  j["recheck_ok"] = r.recheck_ok;
  Json x = Json::array();
  for (double v : r.x) x.push_back(format_double(v));
  j["x"] = x;
  return j;
}

inline Json g_row_to_json(const GTableRow& r) {
  Json j;
  j["n"] = r.n;
  j["k_max"] = r.k_max;
  j["lp_max"] = r.lp_max_exact ? exact_value(*r.lp_max_exact) : Json(nullptr);
  j["argmax_k"] = r.argmax_k ? Json(r.argmax_k) : Json(nullptr);
  j["argmax_a"] = r.argmax_a ? exact_value(*r.argmax_a) : Json(nullptr);
  j["cell_width"] = r.cell_width ? float_value(*r.cell_width) : Json(nullptr);
  j["theorem41_bound"] = r.theorem41_bound;
  j["lrs_threshold"] = r.lrs_threshold;
  j["g_lower"] = r.g_lower;
  j["g_upper"] = r.g_upper;
  j["resolved"] = r.resolved;
  j["provenance"] = r.provenance;
  return j;
}

inline const char* g_table_csv_header() { return "n,k_max,lp_max,cell_width,g_lower,g_upper,resolved"; }

inline std::string g_row_to_csv(const GTableRow& r) {
  std::ostringstream s;
  s << r.n << ',' << r.k_max << ',' << (r.lp_max ? format_double(*r.lp_max) : "") << ','
    << (r.cell_width ? format_double(*r.cell_width) : "") << ',' << r.g_lower << ',' << r.g_upper << ','
    << (r.resolved ? "true" : "false");
  return s.str();
}

}  // namespace delsarte
