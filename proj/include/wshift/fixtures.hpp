#pragma once

#include <string>
#include <vector>

#include "wshift/weightspec.hpp"

namespace wshift::fixtures {

/// beta_n = 1/n for n <= -1 (stored as the modulus -1/n), beta_n = 2 for n >= 0.
WeightSpec example1();
/// beta_n = 1/(n-1) for n <= -1, beta_0 = 2/3, beta_n = 2 - 1/n for n >= 1.
WeightSpec example2();
/// |beta_n| = lambda for n <= 0, mu for n >= 1, with 0 < lambda < mu.
WeightSpec example3(const Rational& lambda = 1, const Rational& mu = 2);
/// Moduli ..., 1/2, 1, 2, 2, 3, 3, ...: the flat pair 1 < 2 = 2 < 3 at j0 = 0.
WeightSpec theorem4();

struct Fixture {
  std::string id;  // "1", "2", "3", "thm4"
  std::string file_name;
  WeightSpec spec;
};

std::vector<Fixture> all();

}  // namespace wshift::fixtures
