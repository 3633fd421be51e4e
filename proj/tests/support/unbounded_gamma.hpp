#pragma once

#include <cmath>

#include "wshift/oracle.hpp"

// Hyponormal weights whose transformed sequence is unbounded. Outside the
// closed-form tail family, so only the oracle can run on it.
//
// For n >= 2 the commutator diagonal is d_{2j+1} = 1/(j(j+1)) and
// d_{2j} = 1/(j(j+1)(j+2)), j >= 1, under beta_n^2 -> 4; then
// gamma_{2j}^2 = beta_{2j}^2 (j + 2). For n <= 1, beta_n^2 = beta_1^2 / (2 - n).
namespace wshift::testing {

inline Rational unbounded_weight_sq(Index n) {
  auto ceil_half = [](Index m) { return (m + 1) / 2; };
  if (n <= 0) {
    const Rational b1 = unbounded_weight_sq(1);
    Rational out = b1 / Rational(2 - n);
    out.canonicalize();
    return out;
  }
  // 4 - sum_{m > n} d_m with telescoped tail sums.
  const Index odd_from = ceil_half(n);       // odd m = 2j+1 > n  <=>  j >= ceil(n/2)
  const Index even_from = ceil_half(n + 1);  // even m = 2j > n  <=>  j >= ceil((n+1)/2)
  Rational out = Rational(4) - Rational(1, odd_from) - Rational(1, 2 * even_from * (even_from + 1));
  out.canonicalize();
  return out;
}

inline WeightSource unbounded_gamma_source() {
  return [](Index n) { return std::sqrt(to_double(unbounded_weight_sq(n))); };
}

}  // namespace wshift::testing
