#pragma once

// Sturm-sequence root counting and isolation on rational intervals, and the
// exact sign test "p <= 0 on [lo, hi]" built on top of it.

#include "delsarte/exactmath/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace delsarte {

// Sturm chain of the squarefree part of p. Members are scaled by positive
// constants only, so sign patterns are those of the classical chain.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("indeterminate root count");
    base_ = squarefree_part(p);
    chain_.push_back(normalized(base_));
    if (base_.degree() <= 0) return;
    chain_.push_back(normalized(base_.derivative()));
    while (chain_.back().degree() > 0) {
      Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(normalized(-r));
    }
  }

  const Poly& squarefree() const { return base_; }

  // Sign variations with zeros dropped. With that convention
  // variations(a) - variations(b) counts the roots in (a, b].
  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      int s = p(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  bool is_root(const Rational& x) const { return base_(x).is_zero(); }

  // Distinct roots in the open interval (a, b); a <= b.
  int count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b) - (is_root(b) ? 1 : 0);
  }

 private:
  static Poly normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading().abs());
  }
  Poly base_;
  std::vector<Poly> chain_;
};

inline int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi,
                            bool closed_lo = true, bool closed_hi = true) {
  if (hi < lo) throw std::invalid_argument("interval lower bound exceeds upper bound");
  SturmChain chain(p);
  if (lo == hi) return (closed_lo && closed_hi && chain.is_root(lo)) ? 1 : 0;
  int n = chain.count_open(lo, hi);
  if (closed_lo && chain.is_root(lo)) ++n;
  if (closed_hi && chain.is_root(hi)) ++n;
  return n;
}

// Either an exact root (lo == hi) or an open interval (lo, hi) holding exactly
// one root, with neither endpoint a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

// Isolates every distinct real root of p in the closed interval [lo, hi],
// sorted ascending. Open isolating intervals are bisected until narrower than
// max_width when it is given.
inline std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi,
                                               const std::optional<Rational>& max_width = std::nullopt) {
  if (hi < lo) throw std::invalid_argument("interval lower bound exceeds upper bound");
  SturmChain chain(p);
  std::vector<RootInterval> out;
  if (chain.squarefree().degree() <= 0) return out;
  if (chain.is_root(lo)) out.push_back({lo, lo});
  if (lo == hi) return out;

  struct Pending {
    Rational a, b;
    int count;
  };
  std::vector<RootInterval> inner;
  std::vector<Pending> stack;
  stack.push_back({lo, hi, chain.count_open(lo, hi)});
  const Rational half(1, 2);
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    bool clean = !chain.is_root(cur.a) && !chain.is_root(cur.b);
    bool narrow = !max_width || (cur.b - cur.a) <= *max_width;
    if (cur.count == 1 && clean && narrow) {
      inner.push_back({cur.a, cur.b});
      continue;
    }
    Rational mid = (cur.a + cur.b) * half;
    int left = chain.count_open(cur.a, mid);
    bool mid_root = chain.is_root(mid);
    if (mid_root) inner.push_back({mid, mid});
    stack.push_back({mid, cur.b, cur.count - left - (mid_root ? 1 : 0)});
    stack.push_back({cur.a, mid, left});
  }
  std::sort(inner.begin(), inner.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  out.insert(out.end(), inner.begin(), inner.end());
  if (chain.is_root(hi)) out.push_back({hi, hi});
  return out;
}

// A maximal open subinterval of [lo, hi] free of roots, represented by two
// non-root points inside it (or the interval endpoints) and a sample point
// strictly between the bracketing roots.
struct RootFreeGap {
  Rational left;
  Rational right;
  Rational sample;
  int sign;
};

inline std::vector<RootFreeGap> root_free_gaps(const Poly& p, const Rational& lo, const Rational& hi,
                                               const std::optional<Rational>& max_width = std::nullopt) {
  std::vector<RootFreeGap> gaps;
  if (p.is_zero()) return gaps;
  auto roots = isolate_roots(p, lo, hi, max_width);
  const Rational half(1, 2);
  // Boundary points of each gap: the nearest non-root point adjacent to each
  // bracketing root.
  auto push = [&](const Rational& l, const Rational& r, const Rational& sample) {
    gaps.push_back({l, r, sample, p(sample).sign()});
  };
  if (roots.empty()) {
    push(lo, hi, lo);
    return gaps;
  }
  if (!roots.front().exact() || roots.front().lo != lo) {
    const Rational& right = roots.front().lo;
    push(lo, right, lo);
  }
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    const auto& a = roots[i];
    const auto& b = roots[i + 1];
    Rational l = a.hi;
    Rational r = b.lo;
    Rational sample = !a.exact() ? a.hi : (!b.exact() ? b.lo : (a.hi + b.lo) * half);
    push(l, r, sample);
  }
  if (!roots.back().exact() || roots.back().hi != hi) {
    push(roots.back().hi, hi, hi);
  }
  return gaps;
}

struct SignCheck {
  bool nonpositive = true;
  std::optional<Rational> witness;  // a point with p > 0 when violated
};

// Decides p(x) <= 0 for all x in [lo, hi] exactly.
inline SignCheck check_nonpositive(const Poly& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("interval lower bound exceeds upper bound");
  if (p.is_zero()) return {};
  for (const auto& gap : root_free_gaps(p, lo, hi)) {
    if (gap.sign > 0) return {false, gap.sample};
  }
  return {};
}

inline bool nonpositive_on_interval(const Poly& p, const Rational& lo, const Rational& hi) {
  return check_nonpositive(p, lo, hi).nonpositive;
}

// Every real root lies in [-B, B].
inline Rational cauchy_root_bound(const Poly& p) {
  if (p.degree() <= 0) return Rational(0);
  Rational best;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = (p.coeff(static_cast<size_t>(i)) / p.leading()).abs();
    if (best < r) best = r;
  }
  return best + Rational(1);
}

}  // namespace delsarte
