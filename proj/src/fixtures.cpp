#include "wshift/fixtures.hpp"

#include <stdexcept>

namespace wshift::fixtures {

namespace {

constexpr const char* kUnverifiedNote =
    "published claim: near subnormal, not subnormal (unverified here)";
constexpr const char* kProblem160Note = "answer to Hilbert space problem 160";

// -1/n, the modulus of 1/n on n <= -1.
RationalFunction minus_reciprocal() {
  return RationalFunction(Polynomial::constant(-1), Polynomial::variable());
}

}  // namespace

WeightSpec example1() {
  WeightSpec s;
  s.name = "ex1";
  s.notes = std::string(kUnverifiedNote) + "; left tail stores the modulus -1/n of beta_n = 1/n";
  s.window_start = 0;
  s.window_values = {Rational(2)};
  s.left_tail = TailSpec::rational(minus_reciprocal());
  s.right_tail = TailSpec::constant(2);
  return s;
}

WeightSpec example2() {
  WeightSpec s;
  s.name = "ex2";
  s.notes = std::string(kUnverifiedNote) +
            "; left tail stores the modulus -1/(n-1) of beta_n = 1/(n-1)";
  s.window_start = 0;
  s.window_values = {Rational(2, 3)};
  // -1/(n - 1) on n <= -1.
  s.left_tail = TailSpec::rational(
      RationalFunction(Polynomial::constant(-1), Polynomial({Rational(-1), Rational(1)})));
  // 2 - 1/n = (2n - 1)/n on n >= 1.
  s.right_tail = TailSpec::rational(
      RationalFunction(Polynomial({Rational(-1), Rational(2)}), Polynomial::variable()));
  return s;
}

WeightSpec example3(const Rational& lambda, const Rational& mu) {
  if (!(0 < lambda && lambda < mu)) throw std::invalid_argument("example 3 needs 0 < lambda < mu");
  WeightSpec s;
  s.name = "ex3";
  s.notes = kProblem160Note;
  s.window_start = 0;
  s.window_values = {lambda};
  s.left_tail = TailSpec::constant(lambda);
  s.right_tail = TailSpec::constant(mu);
  return s;
}

WeightSpec theorem4() {
  WeightSpec s;
  s.name = "thm4";
  s.notes = kProblem160Note;
  s.window_start = 0;
  s.window_values = {Rational(2), Rational(2), Rational(3)};
  s.left_tail = TailSpec::rational(minus_reciprocal());
  s.right_tail = TailSpec::constant(3);
  return s;
}

std::vector<Fixture> all() {
  return {
      {"1", "ex1.json", example1()},
      {"2", "ex2.json", example2()},
      {"3", "ex3.json", example3()},
      {"thm4", "thm4.json", theorem4()},
  };
}

}  // namespace wshift::fixtures
