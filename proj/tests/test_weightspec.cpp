#include <doctest.h>

#include <cmath>
#include <random>

#include "support/random_spec.hpp"
#include "wshift/fixtures.hpp"
#include "wshift/weightspec.hpp"

using namespace wshift;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
  for (const auto& v : r.violations) {
    if (v.code == code) return true;
  }
  return false;
}

RationalFunction over_n(std::initializer_list<long> num) {
  std::vector<Rational> c;
  for (long x : num) c.emplace_back(x);
  return RationalFunction(Polynomial(c), Polynomial::variable());
}

}  // namespace

TEST_CASE("validate fixtures") {
  const ValidationReport r = validate(fixtures::example1());
  CHECK(r.ok());
  CHECK(r.sup_bound == 2);
  for (const auto& f : fixtures::all()) CHECK(validate(f.spec).ok());
  CHECK(validate(fixtures::example2()).sup_bound == 2);
  CHECK(validate(fixtures::theorem4()).sup_bound == 3);
}

TEST_CASE("validate violations") {
  WeightSpec s = fixtures::example1();
  s.window_values = {Rational(0)};
  CHECK(has_code(validate(s), "zero_weight"));

  s = fixtures::example1();
  s.window_values = {Rational(-1)};
  CHECK(has_code(validate(s), "negative_weight"));

  s = fixtures::example1();
  s.window_values.clear();
  CHECK(has_code(validate(s), "empty_window"));

  s = fixtures::example1();
  s.left_tail = TailSpec::rational(RationalFunction::polynomial(Polynomial::variable()));
  CHECK(has_code(validate(s), "unbounded_tail"));

  // 1/n is negative on n <= -1
  s = fixtures::example1();
  s.left_tail = TailSpec::rational(over_n({1}));
  CHECK(has_code(validate(s), "nonpositive_tail"));

  // pole at n = -3 on the left domain
  s = fixtures::example1();
  s.left_tail = TailSpec::rational(
      RationalFunction(Polynomial::constant(1), Polynomial({Rational(3), Rational(1)})));
  CHECK(has_code(validate(s), "tail_pole"));

  s = fixtures::example1();
  s.right_tail = TailSpec::constant(0);
  CHECK(has_code(validate(s), "zero_weight"));
  s.right_tail = TailSpec::constant(Rational(-1, 2));
  CHECK(has_code(validate(s), "negative_weight"));

  std::vector<Rational> big(18, Rational(0));
  big.back() = 1;
  s = fixtures::example1();
  s.right_tail = TailSpec::rational(RationalFunction(Polynomial(big), Polynomial(big) + Polynomial::constant(1)));
  CHECK(has_code(validate(s), "degree_cap"));
}

TEST_CASE("eval_exact") {
  CHECK(eval_exact(fixtures::example1(), -3) == Rational(1, 3));
  CHECK(eval_exact(fixtures::example2(), 0) == Rational(2, 3));
  CHECK(eval_exact(fixtures::example2(), 4) == Rational(7, 4));
  CHECK(eval_exact(fixtures::example2(), -2) == Rational(1, 3));
  CHECK(eval_exact(fixtures::example3(), 0) == 1);
  CHECK(eval_exact(fixtures::example3(), 1) == 2);
}

TEST_CASE("eval_float") {
  CHECK(eval_float(fixtures::example1(), -2) == 0.5);
  CHECK(eval_float(fixtures::example2(), 3) == 1.6666666666666667);
  CHECK(eval_float(fixtures::example3(), 0) == 1.0);
}

TEST_CASE("random specs: positivity and float rounding") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Index> far(-1'000'000, 1'000'000);
  for (int i = 0; i < 40; ++i) {
    const WeightSpec s = testing::random_spec(rng);
    REQUIRE(validate(s).ok());
    for (int j = 0; j < 50; ++j) {
      const Index n = j < 25 ? far(rng) : s.window_start - 12 + j;
      const Rational v = eval_exact(s, n);
      CHECK(v > 0);
      const double f = eval_float(s, n);
      // within one ulp of the exact value
      const double up = std::nextafter(f, INFINITY), down = std::nextafter(f, -INFINITY);
      CHECK(Rational(down) < v);
      CHECK(v < Rational(up));
    }
  }
}

TEST_CASE("scaled multiplies every weight") {
  const Rational c(7, 3);
  for (const auto& f : fixtures::all()) {
    const WeightSpec s = scaled(f.spec, c);
    for (Index n = -30; n <= 30; ++n) CHECK(eval_exact(s, n) == c * eval_exact(f.spec, n));
  }
}
