#pragma once

// Dense two-phase tableau simplex, generic over the scalar type.
//
// With T = Rational every pivot is exact and the optimum, assignment and
// duals are exact. With T = double the same code runs with tolerances; the
// floating mode is only used where a later exact pass re-verifies results.
//
// Entering variable: largest reduced cost, switching to Bland's smallest-index
// rule after any degenerate pivot until progress resumes. Leaving variable:
// minimum ratio, ties broken by smallest basic index. This combination cannot
// cycle.

#include "delsarte/exactmath/rational.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

namespace delsarte {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };
enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

template <class T>
struct Constraint {
  std::vector<T> coeffs;
  Relation relation = Relation::less_equal;
  T rhs{};
};

template <class T>
struct LinearProgram {
  std::vector<T> objective;
  Sense sense = Sense::maximize;
  std::vector<Constraint<T>> constraints;
  // Per-variable bounds; nullopt means unbounded in that direction.
  std::vector<std::optional<T>> lower;
  std::vector<std::optional<T>> upper;

  LinearProgram() = default;
  // All variables nonnegative, no upper bounds.
  LinearProgram(size_t num_vars, Sense s)
      : objective(num_vars), sense(s), lower(num_vars, T(0)), upper(num_vars) {}

  size_t num_vars() const { return objective.size(); }
  void add(std::vector<T> coeffs, Relation rel, T rhs) {
    if (coeffs.size() != objective.size()) throw std::invalid_argument("constraint width differs from objective");
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  void set_free(size_t j) {
    lower.at(j).reset();
    upper.at(j).reset();
  }
};

template <class T>
struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  T value{};
  std::vector<T> assignment;
  // One per user constraint. Sign convention: value = sum_i dual_i * rhs_i
  // plus bound terms. For maximize, <= rows have dual >= 0 and >= rows have
  // dual <= 0; for minimize the signs flip. Equality duals are free.
  std::vector<T> dual_values;
  size_t pivots = 0;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool positive(const Rational& x) { return x.sign() > 0; }
  static bool negative(const Rational& x) { return x.sign() < 0; }
  static bool pivot_ok(const Rational& x) { return x.sign() > 0; }
};

template <>
struct ScalarOps<double> {
  static constexpr double eps = 1e-9;
  static bool is_zero(double x) { return std::abs(x) <= 1e-12; }
  static bool positive(double x) { return x > eps; }
  static bool negative(double x) { return x < -eps; }
  static bool pivot_ok(double x) { return x > 1e-11; }
};

template <class T>
class Tableau {
  using Ops = ScalarOps<T>;

 public:
  Tableau(size_t rows, size_t cols) : rows_(rows, std::vector<T>(cols + 1)), cost_(cols + 1), basis_(rows), blocked_(cols) {}

  std::vector<std::vector<T>>& rows() { return rows_; }
  std::vector<T>& cost() { return cost_; }
  std::vector<size_t>& basis() { return basis_; }
  std::vector<bool>& blocked() { return blocked_; }
  size_t cols() const { return cost_.size() - 1; }
  size_t pivots() const { return pivots_; }

  // Sets the reduced-cost row for objective c (maximize) under the current basis.
  void price(const std::vector<T>& c) {
    const size_t n = cols();
    for (size_t j = 0; j < n; ++j) cost_[j] = c[j];
    cost_[n] = T(0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      const T& cb = c[basis_[r]];
      if (Ops::is_zero(cb)) continue;
      for (size_t j = 0; j <= n; ++j)
        if (!Ops::is_zero(rows_[r][j])) cost_[j] -= cb * rows_[r][j];
    }
  }

  // Returns false when unbounded.
  bool optimize(size_t max_pivots) {
    bool bland = false;
    const size_t n = cols();
    while (true) {
      std::optional<size_t> enter;
      for (size_t j = 0; j < n; ++j) {
        if (blocked_[j] || !Ops::positive(cost_[j])) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (!enter || cost_[*enter] < cost_[j]) enter = j;
      }
      if (!enter) return true;
      std::optional<size_t> leave;
      T best_ratio{};
      for (size_t r = 0; r < rows_.size(); ++r) {
        const T& a = rows_[r][*enter];
        if (!Ops::pivot_ok(a)) continue;
        T ratio = rows_[r][n] / a;
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      bland = Ops::is_zero(best_ratio);
      pivot(*leave, *enter);
      if (pivots_ > max_pivots) throw SolverError("simplex pivot limit exceeded");
    }
  }

  void pivot(size_t r, size_t j) {
    ++pivots_;
    const size_t n = cols();
    auto& prow = rows_[r];
    const T inv = T(1) / prow[j];
    std::vector<size_t> nz;
    for (size_t k = 0; k <= n; ++k) {
      if (Ops::is_zero(prow[k])) {
        prow[k] = T(0);
        continue;
      }
      prow[k] *= inv;
      nz.push_back(k);
    }
    prow[j] = T(1);
    auto eliminate = [&](std::vector<T>& row) {
      if (Ops::is_zero(row[j])) return;
      const T f = row[j];
      for (size_t k : nz) row[k] -= f * prow[k];
      row[j] = T(0);
    };
    for (size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(cost_);
    basis_[r] = j;
  }

 private:
  std::vector<std::vector<T>> rows_;
  std::vector<T> cost_;
  std::vector<size_t> basis_;
  std::vector<bool> blocked_;
  size_t pivots_ = 0;
};

}  // namespace detail

namespace detail {

// The LP rewritten as: maximize c'x' subject to rows with rhs >= 0, x' >= 0,
// plus one identity column (slack or artificial) per row.
template <class T>
struct StandardForm {
  struct VarMap {
    T offset{};
    size_t col = 0;
    T sign = T(1);
    std::optional<size_t> neg_col;  // free variables: x = x+ - x-
  };
  std::vector<VarMap> vars;
  size_t user_rows = 0;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<std::vector<T>> matrix;  // rows x (cols + 1), last entry rhs
  std::vector<bool> negated;
  std::vector<size_t> identity_col;
  std::vector<bool> artificial;
  std::vector<T> cost;  // phase-2 objective (maximize)
  T constant{};
  T dir = T(1);
  bool trivially_infeasible = false;
};

template <class T>
StandardForm<T> standardize(const LinearProgram<T>& lp) {
  using Ops = ScalarOps<T>;
  const size_t nv = lp.num_vars();
  if (lp.lower.size() != nv || lp.upper.size() != nv)
    throw std::invalid_argument("bounds vectors must match the number of variables");
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != nv) throw std::invalid_argument("constraint width differs from objective");

  StandardForm<T> sf;
  sf.vars.resize(nv);
  size_t ncols = 0;
  struct Row {
    std::vector<std::pair<size_t, T>> terms;
    Relation rel;
    T rhs;
  };
  std::vector<Row> rows;
  std::vector<std::pair<size_t, T>> bound_rows;  // (column, upper - lower)
  for (size_t j = 0; j < nv; ++j) {
    auto& v = sf.vars[j];
    const auto& lo = lp.lower[j];
    const auto& hi = lp.upper[j];
    if (lo && hi && *hi < *lo) sf.trivially_infeasible = true;
    v.col = ncols++;
    if (lo) {
      v.offset = *lo;
      if (hi) bound_rows.emplace_back(v.col, *hi - *lo);
    } else if (hi) {
      v.offset = *hi;
      v.sign = T(-1);
    } else {
      v.neg_col = ncols++;
    }
  }
  for (const auto& c : lp.constraints) {
    Row row{{}, c.relation, c.rhs};
    for (size_t j = 0; j < nv; ++j) {
      if (Ops::is_zero(c.coeffs[j])) continue;
      const auto& v = sf.vars[j];
      row.rhs -= c.coeffs[j] * v.offset;
      row.terms.emplace_back(v.col, c.coeffs[j] * v.sign);
      if (v.neg_col) row.terms.emplace_back(*v.neg_col, -c.coeffs[j]);
    }
    rows.push_back(std::move(row));
  }
  sf.user_rows = rows.size();
  for (auto& [col, cap] : bound_rows) rows.push_back({{{col, T(1)}}, Relation::less_equal, cap});

  const size_t m = rows.size();
  sf.rows = m;
  sf.negated.assign(m, false);
  size_t extra = 0;
  for (size_t i = 0; i < m; ++i) {
    auto& row = rows[i];
    if (row.rhs < T(0)) {
      sf.negated[i] = true;
      row.rhs = -row.rhs;
      for (auto& t : row.terms) t.second = -t.second;
      if (row.rel == Relation::less_equal)
        row.rel = Relation::greater_equal;
      else if (row.rel == Relation::greater_equal)
        row.rel = Relation::less_equal;
    }
    extra += row.rel == Relation::greater_equal ? 2 : 1;
  }
  const size_t total = ncols + extra;
  sf.cols = total;
  sf.matrix.assign(m, std::vector<T>(total + 1));
  sf.identity_col.resize(m);
  sf.artificial.assign(total, false);
  size_t next = ncols;
  for (size_t i = 0; i < m; ++i) {
    auto& trow = sf.matrix[i];
    for (auto& [col, a] : rows[i].terms) trow[col] += a;
    trow[total] = rows[i].rhs;
    if (rows[i].rel == Relation::greater_equal) trow[next++] = T(-1);  // surplus
    size_t id = next++;
    trow[id] = T(1);
    sf.identity_col[i] = id;
    sf.artificial[id] = rows[i].rel != Relation::less_equal;
  }

  sf.dir = lp.sense == Sense::maximize ? T(1) : T(-1);
  sf.cost.assign(total, T(0));
  for (size_t j = 0; j < nv; ++j) {
    const auto& v = sf.vars[j];
    const T cj = lp.objective[j] * sf.dir;
    sf.constant += lp.objective[j] * v.offset;
    sf.cost[v.col] += cj * v.sign;
    if (v.neg_col) sf.cost[*v.neg_col] -= cj;
  }
  return sf;
}

template <class T>
Tableau<T> initial_tableau(const StandardForm<T>& sf) {
  Tableau<T> tab(sf.rows, sf.cols);
  tab.rows() = sf.matrix;
  for (size_t i = 0; i < sf.rows; ++i) tab.basis()[i] = sf.identity_col[i];
  return tab;
}

// Runs phase 1; returns false if infeasible. Leaves artificials blocked.
template <class T>
bool phase_one(Tableau<T>& tab, const StandardForm<T>& sf, size_t max_pivots) {
  using Ops = ScalarOps<T>;
  const size_t total = sf.cols;
  bool any = false;
  for (size_t j = 0; j < total; ++j) any = any || sf.artificial[j];
  if (any) {
    std::vector<T> c1(total);
    for (size_t j = 0; j < total; ++j)
      if (sf.artificial[j]) c1[j] = T(-1);
    tab.price(c1);
    tab.optimize(max_pivots);
    if (Ops::positive(tab.cost()[total])) return false;
  }
  drive_out_artificials(tab, sf);
  return true;
}

template <class T>
void drive_out_artificials(Tableau<T>& tab, const StandardForm<T>& sf) {
  using Ops = ScalarOps<T>;
  for (size_t r = 0; r < sf.rows; ++r) {
    if (!sf.artificial[tab.basis()[r]]) continue;
    for (size_t j = 0; j < sf.cols; ++j) {
      if (sf.artificial[j] || Ops::is_zero(tab.rows()[r][j])) continue;
      tab.pivot(r, j);
      break;
    }
  }
  for (size_t j = 0; j < sf.cols; ++j) tab.blocked()[j] = sf.artificial[j];
}

template <class T>
LPSolution<T> extract(Tableau<T>& tab, const StandardForm<T>& sf) {
  const size_t total = sf.cols;
  LPSolution<T> sol;
  std::vector<T> xs(total);
  for (size_t r = 0; r < sf.rows; ++r) xs[tab.basis()[r]] = tab.rows()[r][total];
  sol.status = LPStatus::optimal;
  sol.assignment.resize(sf.vars.size());
  for (size_t j = 0; j < sf.vars.size(); ++j) {
    const auto& v = sf.vars[j];
    T x = v.offset + v.sign * xs[v.col];
    if (v.neg_col) x -= xs[*v.neg_col];
    sol.assignment[j] = x;
  }
  sol.value = sf.constant + sf.dir * (T(0) - tab.cost()[total]);
  for (size_t i = 0; i < sf.user_rows; ++i) {
    T y = T(0) - tab.cost()[sf.identity_col[i]];
    if (sf.negated[i]) y = -y;
    sol.dual_values.push_back(sf.dir * y);
  }
  sol.pivots = tab.pivots();
  return sol;
}

template <class T>
LPSolution<T> solve_cold(const StandardForm<T>& sf, size_t max_pivots) {
  LPSolution<T> sol;
  if (sf.trivially_infeasible) return sol;
  Tableau<T> tab = initial_tableau(sf);
  if (!phase_one(tab, sf, max_pivots)) {
    sol.pivots = tab.pivots();
    return sol;
  }
  tab.price(sf.cost);
  if (!tab.optimize(max_pivots)) {
    sol.status = LPStatus::unbounded;
    sol.pivots = tab.pivots();
    return sol;
  }
  return extract(tab, sf);
}

// Floating solve of the same standard form, returning its final basis.
inline std::optional<std::vector<size_t>> floating_basis(const StandardForm<Rational>& sf, size_t max_pivots) {
  StandardForm<double> fd;
  fd.rows = sf.rows;
  fd.cols = sf.cols;
  fd.user_rows = sf.user_rows;
  fd.identity_col = sf.identity_col;
  fd.artificial = sf.artificial;
  fd.matrix.assign(sf.rows, std::vector<double>(sf.cols + 1));
  for (size_t i = 0; i < sf.rows; ++i)
    for (size_t j = 0; j <= sf.cols; ++j) fd.matrix[i][j] = sf.matrix[i][j].to_double();
  fd.cost.resize(sf.cols);
  for (size_t j = 0; j < sf.cols; ++j) fd.cost[j] = sf.cost[j].to_double();
  try {
    Tableau<double> tab = initial_tableau(fd);
    if (!phase_one(tab, fd, max_pivots)) return std::nullopt;
    tab.price(fd.cost);
    if (!tab.optimize(max_pivots)) return std::nullopt;
    return tab.basis();
  } catch (const SolverError&) {
    return std::nullopt;
  }
}

// Pivots the exact tableau onto `target`, then finishes phase 2 exactly.
// Returns nullopt if the basis is singular or not primal feasible.
inline std::optional<LPSolution<Rational>> solve_from_basis(const StandardForm<Rational>& sf,
                                                            const std::vector<size_t>& target, size_t max_pivots) {
  Tableau<Rational> tab = initial_tableau(sf);
  std::vector<bool> wanted(sf.cols, false);
  for (size_t j : target) wanted[j] = true;
  for (size_t j : target) {
    bool basic = false;
    for (size_t b : tab.basis()) basic = basic || b == j;
    if (basic) continue;
    std::optional<size_t> row;
    for (size_t r = 0; r < sf.rows; ++r) {
      if (wanted[tab.basis()[r]] || tab.rows()[r][j].is_zero()) continue;
      row = r;
      break;
    }
    if (!row) return std::nullopt;
    tab.pivot(*row, j);
  }
  for (size_t r = 0; r < sf.rows; ++r) {
    const Rational& rhs = tab.rows()[r][sf.cols];
    if (rhs.sign() < 0) return std::nullopt;
    if (sf.artificial[tab.basis()[r]] && !rhs.is_zero()) return std::nullopt;
  }
  drive_out_artificials(tab, sf);
  tab.price(sf.cost);
  if (!tab.optimize(max_pivots)) {
    LPSolution<Rational> sol;
    sol.status = LPStatus::unbounded;
    sol.pivots = tab.pivots();
    return sol;
  }
  return extract(tab, sf);
}

}  // namespace detail

// Solves the LP. For Rational, a floating pre-solve proposes the optimal
// basis; the exact tableau is pivoted onto it and phase 2 completes in exact
// arithmetic, so the result is exact either way. Infeasibility is always
// decided by the exact solver.
template <class T>
LPSolution<T> simplex_solve(const LinearProgram<T>& lp, size_t max_pivots = 1000000) {
  auto sf = detail::standardize(lp);
  if constexpr (std::is_same_v<T, Rational>) {
    if (!sf.trivially_infeasible) {
      if (auto basis = detail::floating_basis(sf, max_pivots)) {
        if (auto sol = detail::solve_from_basis(sf, *basis, max_pivots)) return *sol;
      }
    }
  }
  return detail::solve_cold(sf, max_pivots);
}

}  // namespace delsarte
