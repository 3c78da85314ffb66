#pragma once

// Spherical two-distance sets: Larman-Rogers-Seidel parameters, companion
// inner products, harmonic and LP bounds, and the g(n) table.

#include "delsarte/lpsolve/delsarte_lp.hpp"
#include "delsarte/zonal/zonal.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace delsarte {

// K(n) = floor((1 + sqrt(2n)) / 2): the largest k with (2k - 1)^2 <= 2n.
inline int lrs_K(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  int k = 1;
  while (static_cast<long>(2 * k + 1) * (2 * k + 1) <= 2L * n) ++k;
  return k;
}

// b_k(a) = (k a - 1) / (k - 1).
inline Rational companion_b(const Rational& a, int k) {
  if (k < 2) throw std::invalid_argument("LRS integer k must be >= 2");
  return (Rational(k) * a - Rational(1)) / Rational(k - 1);
}

// [lo, hi) with the upper end excluded.
struct HalfOpenInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x < hi; }
  Rational width() const { return hi - lo; }
};

// I_k = [(2 - k) / k, 1 / (2k - 1)).
inline HalfOpenInterval interval_I(int k) {
  if (k < 2) throw std::invalid_argument("LRS integer k must be >= 2");
  return {Rational(2 - k, k), Rational(1, 2 * k - 1)};
}

struct TwoDistanceInstance {
  int n;
  int k;
  Rational a;
  Rational b;

  static TwoDistanceInstance make(int n, int k, const Rational& a) {
    if (!interval_I(k).contains(a)) throw std::invalid_argument("a lies outside I_k");
    return {n, k, a, companion_b(a, k)};
  }
};

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!out.fits_ulong_p()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return out.get_ui();
}

// Dimension of the degree-k harmonic space on S^{n-1}.
inline std::uint64_t harmonic_dimension(int n, int k) {
  if (k == 0) return 1;
  return binomial(n + k - 2, k) + binomial(n + k - 3, k - 1);
}

// |S| <= sum of h_k over k with f_k > 0, f = prod_i (t - a_i) in G_k^(n).
inline std::uint64_t nozaki_bound(int n, std::span<const Rational> inner_products) {
  for (size_t i = 0; i < inner_products.size(); ++i) {
    if (inner_products[i] < Rational(-1) || inner_products[i] >= Rational(1))
      throw std::invalid_argument("inner products must lie in [-1, 1)");
    for (size_t j = 0; j < i; ++j)
      if (inner_products[i] == inner_products[j]) throw std::invalid_argument("inner products must be distinct");
  }
  Poly f = Poly::constant(Rational(1));
  for (const auto& a : inner_products) f *= Poly::linear_factor(a);
  const auto expansion = expand_in_zonal_basis(f, ZonalFamily::gegenbauer(n));
  std::uint64_t total = 0;
  for (size_t k = 0; k < expansion.coeffs.size(); ++k)
    if (expansion.coeffs[k].sign() > 0) total += harmonic_dimension(n, static_cast<int>(k));
  return total;
}

inline std::int64_t theorem41_bound(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  return static_cast<std::int64_t>(n) * (n + 1) / 2;
}

struct SweepConfig {
  int degree = 12;
  int grid = 64;
  int refine_rounds = 4;
  int refine_points = 16;
  int shrink = 8;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct GTableRow {
  int n = 0;
  int k_max = 0;
  std::optional<double> lp_max;      // largest two-point LP value over the sweep
  std::optional<Rational> lp_max_exact;
  std::optional<Rational> argmax_a;
  int argmax_k = 0;
  std::optional<double> cell_width;  // final refinement spacing
  std::int64_t theorem41_bound = 0;
  std::int64_t lrs_threshold = 0;
  std::int64_t g_upper = 0;
  std::int64_t g_lower = 0;
  bool resolved = false;
  std::string provenance;  // "lp-sweep", "known-values", "known-construction"
  std::vector<double> round_maxima;  // running maximum after the grid and each refinement
};

namespace detail {

// floor(v + 1e-7): values within 1e-7 below an integer count as that integer.
inline std::int64_t cell_integer(const Rational& v) {
  BigInt f = (v + Rational(1, 10000000)).floor();
  if (!f.fits_slong_p()) throw std::overflow_error("cell value exceeds 64 bits");
  return f.get_si();
}

// Evaluates the two-point LP on each a, in parallel, results in input order.
inline std::vector<Rational> sweep_cells(const ZonalFamily& family, int k, const std::vector<Rational>& as,
                                         const SweepConfig& cfg) {
  std::vector<Rational> values(as.size());
  family.poly(cfg.degree);  // fill the cache before workers share it
  auto work = [&](size_t begin, size_t stride) {
    for (size_t i = begin; i < as.size(); i += stride)
      values[i] = two_point_lp(family, as[i], companion_b(as[i], k), cfg.degree).bound;
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, as.size())));
  if (threads <= 1) {
    work(0, 1);
    return values;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();
  return values;
}

}  // namespace detail

inline GTableRow g_upper(int n, const SweepConfig& cfg = {}) {
  if (n < 7 || n > 39) throw std::invalid_argument("g_upper requires 7 <= n <= 39");
  if (cfg.grid < 2 || cfg.refine_points < 2 || cfg.shrink < 2) throw std::invalid_argument("invalid sweep configuration");
  const auto family = ZonalFamily::gegenbauer(n);
  GTableRow row;
  row.n = n;
  row.k_max = lrs_K(n);
  row.theorem41_bound = theorem41_bound(n);
  row.lrs_threshold = 2L * n + 3;
  row.g_lower = row.theorem41_bound;
  row.provenance = "lp-sweep";

  std::int64_t cell_max = 0;
  std::vector<double> round_max(static_cast<size_t>(cfg.refine_rounds + 1), 0.0);
  double final_width = 0;
  for (int k = 2; k <= row.k_max; ++k) {
    const auto I = interval_I(k);
    Rational spacing = I.width() / Rational(cfg.grid);
    std::vector<Rational> as;
    for (int i = 0; i < cfg.grid; ++i) as.push_back(I.lo + spacing * Rational(i));
    Rational best_a, best_v;
    bool have = false;
    for (int round = 0; round <= cfg.refine_rounds; ++round) {
      const auto values = detail::sweep_cells(family, k, as, cfg);
      for (size_t i = 0; i < as.size(); ++i) {
        cell_max = std::max(cell_max, detail::cell_integer(values[i]));
        if (!have || best_v < values[i]) {
          best_v = values[i];
          best_a = as[i];
          have = true;
        }
      }
      if (!row.lp_max_exact || *row.lp_max_exact < best_v) {
        row.lp_max_exact = best_v;
        row.argmax_a = best_a;
        row.argmax_k = k;
      }
      round_max[static_cast<size_t>(round)] = std::max(round_max[static_cast<size_t>(round)], best_v.to_double());
      if (round == cfg.refine_rounds) break;
      spacing /= Rational(cfg.shrink);
      as.clear();
      const int half = cfg.refine_points / 2;
      for (int j = -half; j <= half; ++j) {
        Rational a = best_a + spacing * Rational(j);
        if (j != 0 && I.contains(a)) as.push_back(a);
      }
    }
    final_width = std::max(final_width, spacing.to_double());
  }
  // The running maximum across k is cumulative per round.
  for (size_t r = 1; r < round_max.size(); ++r) round_max[r] = std::max(round_max[r], round_max[r - 1]);
  row.round_maxima = round_max;
  if (row.lp_max_exact) row.lp_max = row.lp_max_exact->to_double();
  if (row.k_max >= 2) row.cell_width = final_width;
  row.g_upper = std::max({row.theorem41_bound, row.lrs_threshold, cell_max});
  row.resolved = row.g_upper == row.g_lower;
  return row;
}

// Known maxima for n = 2..6 (not LP-derived).
inline std::optional<std::int64_t> known_g(int n) {
  switch (n) {
    case 2: return 5;
    case 3: return 6;
    case 4: return 10;
    case 5: return 16;
    case 6: return 27;
    case 22: return 275;  // n(n+3)/2 construction
    default: return std::nullopt;
  }
}

inline std::vector<GTableRow> g_table(int n_from, int n_to, const SweepConfig& cfg = {}) {
  if (n_from < 2 || n_to > 39 || n_from > n_to) throw std::invalid_argument("g_table requires 2 <= from <= to <= 39");
  std::vector<GTableRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    if (n < 7) {
      GTableRow row;
      row.n = n;
      row.k_max = lrs_K(n);
      row.theorem41_bound = theorem41_bound(n);
      row.lrs_threshold = 2L * n + 3;
      row.g_lower = row.g_upper = *known_g(n);
      row.resolved = true;
      row.provenance = "known-values";
      rows.push_back(std::move(row));
      continue;
    }
    GTableRow row = g_upper(n, cfg);
    if (n == 22) {
      // The LP sweep does not settle n = 22; the lower bound is the known
      // construction with n(n+3)/2 points.
      row.g_lower = *known_g(22);
      row.resolved = row.g_upper == row.g_lower;
      row.provenance = "known-construction";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace delsarte
