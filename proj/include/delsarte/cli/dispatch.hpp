#pragma once

// Command-line front end. Exit codes: 0 success or valid certificate,
// 1 invalid certificate, 2 usage error, 3 solver or output failure.

#include "delsarte/certify/partitions.hpp"
#include "delsarte/cli/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace delsarte::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

enum ExitCode { kOk = 0, kInvalid = 1, kUsage = 2, kFailure = 3 };

enum class Format { text, json, csv };

struct RunConfig {
  std::string command;
  int degree = 9;
  int grid = 256;
  int m = 4;
  double tolerance = 1e-9;
  bool exact = true;
  Format output_format = Format::text;
  std::optional<std::string> output_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json provenance = Json::object();
  std::vector<std::string> csv_rows;  // tabular commands only
  std::string csv_header;
  int exit_code = kOk;

  Json to_json() const {
    Json j;
    j["schema"] = kSchema;
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["provenance"] = provenance;
    return j;
  }
};

namespace detail {

inline bool is_tagged_value(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("value") && j.contains("decimal") && j.contains("exact");
}

inline std::string scalar_text(const Json& j) {
  if (is_tagged_value(j)) {
    std::string v = j["value"].get<std::string>(), d = j["decimal"].get<std::string>();
    return v == d ? v : v + " (" + d + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

inline void text_lines(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !is_tagged_value(j)) {
    for (const auto& [key, value] : j.items()) text_lines(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& x : j) flat = flat && !x.is_object() && !x.is_array();
    if (flat) {
      out << prefix << ':';
      for (const auto& x : j) out << ' ' << scalar_text(x);
      out << '\n';
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << scalar_text(j) << '\n';
}

}  // namespace detail

inline std::string emit_report(const Report& report, const RunConfig& cfg) {
  std::ostringstream out;
  switch (cfg.output_format) {
    case Format::json: out << report.to_json().dump(2) << '\n'; break;
    case Format::csv:
      if (report.csv_header.empty()) throw UsageError("--format csv is only available for tabular commands");
      out << report.csv_header << '\n';
      for (const auto& row : report.csv_rows) out << row << '\n';
      break;
    case Format::text:
      out << report.command << '\n';
      detail::text_lines(report.results, "", out);
      break;
  }
  return out.str();
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("invalid integer list: '" + text + "'");
    }
    if (pos != item.size()) throw UsageError("invalid integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

inline Rational parse_cosine(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("invalid cosine '" + text + "'; expected p/q");
  }
}

inline Json lp_provenance(const DelsarteBound& b) {
  return Json{{"degree", b.degree},      {"grid", b.grid_size},         {"cut_rounds", b.cut_rounds},
              {"cut_points", b.cut_points}, {"exact", true}, {"solver", "exact rational simplex"}};
}

inline Report run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read certificate file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("malformed certificate JSON: " + std::string(e.what()));
  }
  Certificate cert;
  try {
    cert = certificate_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Report r{"verify"};
  r.inputs = certificate_to_json(cert);
  r.results = report_to_json(verify_certificate(cert));
  r.provenance = Json{{"exact", true}, {"method", "zonal expansion and Sturm sign analysis"}};
  r.exit_code = r.results["verdict"] == "valid" ? kOk : kInvalid;
  return r;
}

inline Report run_code(const std::string& command, int n, const Rational& z, const RunConfig& cfg) {
  if (n < 2) throw UsageError("--dim must be >= 2");
  if (z < Rational(-1) || !(z < Rational(1))) throw UsageError("--cos-z must satisfy -1 <= z < 1");
  auto b = delsarte_lp_dual(ZonalFamily::gegenbauer(n), Rational(-1), z, cfg.degree, static_cast<size_t>(cfg.grid));
  Report r{command};
  r.inputs = Json{{"dimension", n}, {"cos_threshold", z.to_string()}, {"degree", cfg.degree}, {"grid", cfg.grid}};
  r.results = delsarte_bound_to_json(b);
  r.provenance = lp_provenance(b);
  return r;
}

inline Report run_two_distance(int from, int to, const SweepConfig& sweep) {
  Report r{"two-distance"};
  r.inputs = Json{{"from", from}, {"to", to}, {"degree", sweep.degree}, {"grid", sweep.grid},
                  {"refine_rounds", sweep.refine_rounds}};
  Json rows = Json::array();
  r.csv_header = g_table_csv_header();
  for (const auto& row : g_table(from, to, sweep)) {
    rows.push_back(g_row_to_json(row));
    r.csv_rows.push_back(g_row_to_csv(row));
  }
  r.results = Json{{"rows", rows}};
  r.provenance = Json{{"exact", false},
                      {"note", "sweep maximum is estimated on a refined grid; each cell LP is exact"}};
  return r;
}

inline Report run_sdp0(int n, const Rational& z, int m, int budget, const RunConfig& cfg) {
  if (n < 2) throw UsageError("--dim must be >= 2");
  if (m < 1) throw UsageError("-m must be >= 1");
  SDP0Options opts;
  opts.cut_budget = budget;
  opts.psd_tolerance = cfg.tolerance;
  opts.exact_resolve = cfg.exact;
  auto res = sdp0_solve({ZonalFamily::gegenbauer(n), Rational(-1), z, m}, opts);
  Report r{"sdp0"};
  r.inputs = Json{{"dimension", n}, {"cos_threshold", z.to_string()}, {"m", m}, {"cut_budget", budget}};
  r.results = sdp0_to_json(res);
  r.provenance = Json{{"exact", false},
                      {"note", "cut loop runs in floating point; bound_exact comes from an exact LP over the final cuts"},
                      {"psd_tolerance", format_double(cfg.tolerance)}};
  return r;
}

inline Report run_builtin_list() {
  Report r{"builtin list"};
  Json names = Json::array();
  for (const auto& c : builtin_certificates()) names.push_back(c.name);
  r.results = Json{{"certificates", names}};
  return r;
}

inline Report run_builtin_show(const std::string& name) {
  Certificate cert;
  try {
    cert = builtin_certificate(name);
  } catch (const std::exception&) {
    throw UsageError("unknown built-in certificate '" + name + "'");
  }
  Report r{"builtin show"};
  r.inputs = Json{{"name", name}};
  r.results = certificate_to_json(cert);
  return r;
}

inline Report run_qomega(const std::string& omega_text, long N, bool brute) {
  PartitionVector omega;
  try {
    omega = PartitionVector(parse_int_list(omega_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (N < 1) throw UsageError("--N must be >= 1");
  Report r{"qomega"};
  r.inputs = Json{{"omega", omega.to_string()}, {"N", N}, {"brute", brute}};
  Rational value = brute ? q_omega_bruteforce(omega, N) : q_omega(omega, N);
  r.results = Json{{"q_omega", exact_value(value)}, {"polynomial", q_omega(omega).to_string()}};
  r.provenance = Json{{"exact", true}, {"method", brute ? "enumeration" : "closed form"}};
  return r;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delsarte bounds for spherical codes and two-distance sets", "delsarte"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output, "Write the report to a file");
  app.add_option("--tolerance", cfg.tolerance, "Floating PSD tolerance");
  app.add_flag("--exact,!--floating", cfg.exact, "Exact re-verification of floating results");
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.set_version_flag("--version", kVersion);

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Verify a certificate JSON file");
  verify->add_option("certificate", cert_path)->required();

  int dim = 0;
  std::string cos_z;
  std::optional<int> degree, grid;
  auto* kissing = app.add_subcommand("kissing", "Delsarte LP bound for the kissing number");
  kissing->add_option("--dim", dim)->required();
  kissing->add_option("--degree", degree);
  kissing->add_option("--grid", grid);

  auto* code = app.add_subcommand("code", "Delsarte LP bound for spherical codes with inner products <= z");
  code->add_option("--dim", dim)->required();
  code->add_option("--cos-z", cos_z, "Cosine threshold as p/q")->required();
  code->add_option("--degree", degree);
  code->add_option("--grid", grid);

  std::optional<int> td_dim;
  int from = 0, to = 0;
  int refine = 4;
  auto* two = app.add_subcommand("two-distance", "Upper bounds for spherical two-distance sets");
  auto* td_dim_opt = two->add_option("--dim", td_dim);
  auto* from_opt = two->add_option("--from", from);
  auto* to_opt = two->add_option("--to", to);
  td_dim_opt->excludes(from_opt)->excludes(to_opt);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  two->add_option("--degree", degree);
  two->add_option("--grid", grid);
  two->add_option("--refine", refine);

  int m = 4;
  int budget = 2000;
  auto* sdp0 = app.add_subcommand("sdp0", "SDP0 bound by eigenvalue cutting planes");
  sdp0->add_option("--dim", dim)->required();
  sdp0->add_option("--cos-z", cos_z, "Cosine threshold as p/q")->required();
  sdp0->add_option("-m", m, "Block order");
  sdp0->add_option("--budget", budget, "Cut rounds");

  std::vector<std::string> builtin_args;
  auto* builtin = app.add_subcommand("builtin", "List or show built-in certificates");
  builtin->add_option("action", builtin_args, "list | show <name>")->required()->expected(1, 2);

  std::string omega;
  long N = 0;
  bool brute = false;
  auto* qomega = app.add_subcommand("qomega", "Normalized tuple counts q_omega(N)");
  qomega->add_option("--omega", omega, "Parts i1,i2,...")->required();
  qomega->add_option("--N", N)->required();
  qomega->add_flag("--brute", brute, "Count by enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  cfg.output_format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (!output.empty()) cfg.output_path = output;
  if (degree) cfg.degree = *degree;
  if (grid) cfg.grid = *grid;
  cfg.m = m;

  Report report;
  try {
    if (verify->parsed()) {
      report = run_verify(cert_path);
    } else if (kissing->parsed()) {
      report = run_code("kissing", dim, Rational(1, 2), cfg);
    } else if (code->parsed()) {
      report = run_code("code", dim, parse_cosine(cos_z), cfg);
    } else if (two->parsed()) {
      if (!td_dim && from_opt->count() == 0) throw UsageError("two-distance needs --dim N or --from A --to B");
      SweepConfig sweep;
      sweep.degree = degree.value_or(12);
      sweep.grid = grid.value_or(64);
      sweep.refine_rounds = refine;
      report = run_two_distance(td_dim ? *td_dim : from, td_dim ? *td_dim : to, sweep);
    } else if (sdp0->parsed()) {
      report = run_sdp0(dim, parse_cosine(cos_z), m, budget, cfg);
    } else if (builtin->parsed()) {
      if (builtin_args[0] == "list" && builtin_args.size() == 1)
        report = run_builtin_list();
      else if (builtin_args[0] == "show" && builtin_args.size() == 2)
        report = run_builtin_show(builtin_args[1]);
      else
        throw UsageError("usage: builtin list | builtin show <name>");
    } else if (qomega->parsed()) {
      report = run_qomega(omega, N, brute);
    }
    report.provenance["config"] = Json{{"degree", cfg.degree}, {"grid", cfg.grid}, {"m", cfg.m},
                                       {"tolerance", format_double(cfg.tolerance)}, {"exact", cfg.exact}};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  std::string bytes;
  try {
    bytes = emit_report(report, cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file || !(file << bytes) || !file.flush()) {
      err << "error: cannot write '" << *cfg.output_path << "'\n";
      return kFailure;
    }
  } else {
    out << bytes;
  }
  return report.exit_code;
}

}  // namespace delsarte::cli
