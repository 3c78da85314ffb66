#pragma once

#include "delsarte/exactmath/poly.hpp"

#include <random>
#include <vector>

namespace delsarte::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 50, long max_den = 20) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int degree, long max_num = 20, long max_den = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, max_num, max_den));
  return Poly(std::move(c));
}

inline Poly f8_poly() {
  const Rational h(1, 2);
  return Poly::linear_factor(h) * Poly::monomial(Rational(1), 2) * Poly::linear_factor(-h).pow(2) *
         Poly::linear_factor(Rational(-1));
}

}  // namespace delsarte::testing
