#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wshift/polynomial.hpp"

namespace wshift {

/// Tail polynomials above this degree are rejected by validate().
inline constexpr int kMaxTailDegree = 16;

/// Closed-form description of one infinite side of the modulus sequence.
class TailSpec {
 public:
  struct Constant {
    Rational value;
  };
  struct RationalForm {
    RationalFunction f;
  };

  static TailSpec constant(const Rational& value) { return TailSpec(Constant{value}); }
  static TailSpec rational(const RationalFunction& f) { return TailSpec(RationalForm{f}); }

  bool is_constant() const { return std::holds_alternative<Constant>(kind_); }
  const Constant& as_constant() const { return std::get<Constant>(kind_); }
  const RationalForm& as_rational() const { return std::get<RationalForm>(kind_); }
  /// The tail as a function of n (constant function for Constant tails).
  RationalFunction function() const;
  TailSpec scaled(const Rational& c) const;

 private:
  explicit TailSpec(std::variant<Constant, RationalForm> kind) : kind_(std::move(kind)) {}
  std::variant<Constant, RationalForm> kind_;
};

/// Bi-infinite sequence of weight moduli |beta_n|: an explicit window
/// [L, R] with the left tail on n < L and the right tail on n > R.
struct WeightSpec {
  Index window_start = 0;
  std::vector<Rational> window_values;
  TailSpec left_tail = TailSpec::constant(1);
  TailSpec right_tail = TailSpec::constant(1);
  std::string name;
  std::string notes;

  Index window_end() const { return window_start + static_cast<Index>(window_values.size()) - 1; }
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Exact upper bound on sup |beta_n|; meaningful only when ok().
  Rational sup_bound;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WeightSpec& spec);

/// |beta_n| exactly. Throws PoleOnRay for a tail pole (unreachable after validate()).
Rational eval_exact(const WeightSpec& spec, Index n);

/// Nearest binary64 value to eval_exact.
double eval_float(const WeightSpec& spec, Index n);

/// Every weight multiplied by c > 0.
WeightSpec scaled(const WeightSpec& spec, const Rational& c);

}  // namespace wshift
