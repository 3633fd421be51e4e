#pragma once

#include <optional>
#include <vector>

#include "wshift/polynomial.hpp"

namespace wshift {

/// The integers n <= endpoint (AtMost) or n >= endpoint (AtLeast).
struct Ray {
  enum class Direction { AtMost, AtLeast };
  Direction direction;
  Index endpoint;

  static Ray at_most(Index a) { return {Direction::AtMost, a}; }
  static Ray at_least(Index a) { return {Direction::AtLeast, a}; }
  bool contains(Index n) const {
    return direction == Direction::AtMost ? n <= endpoint : n >= endpoint;
  }
  /// +1 when the ray runs to +infinity, -1 otherwise.
  int orientation() const { return direction == Direction::AtLeast ? 1 : -1; }
};

struct RaySign {
  enum class Kind { StrictlyPositive, StrictlyNegative, IdenticallyZero, HasZeroAt, MixedSign };
  Kind kind = Kind::IdenticallyZero;
  /// Every integer zero on the ray, ascending (empty for IdenticallyZero).
  std::vector<Index> zeros;
  /// Witnesses nearest the ray endpoint.
  std::optional<Index> positive_witness;
  std::optional<Index> negative_witness;

  bool nonnegative() const;
  bool nonpositive() const;
};

const char* to_string(RaySign::Kind kind);

/// Cauchy bound ceil(1 + max|c_i| / |c_lead|): no real root has |x| >= B.
/// Throws std::domain_error for the zero polynomial.
Index integer_root_free_bound(const Polynomial& p);

/// Fujiwara bound 2 max |a_{d-i}/a_d|^{1/i} (last term halved), plus one, so
/// no root has |x| >= B. Far tighter than Cauchy for high-degree products of
/// small-root factors.
Index fujiwara_root_bound(const Polynomial& p);

/// min of the two bounds above; the one the certification routines use.
Index certification_root_bound(const Polynomial& p);

/// Largest evaluation segment sign_on_ray / sup_on_ray accept.
inline constexpr Index kMaxCertificationSegment = 4'000'000;

/// Exact sign of f at every integer of the ray: exhaustive exact evaluation
/// up to the certification root bound, asymptotic sign beyond it.
/// Throws PoleOnRay if the denominator has an integer zero on the ray.
RaySign sign_on_ray(const RationalFunction& f, Ray ray);

struct Limit {
  bool finite = true;
  Rational value;    // valid when finite
  int infinite_sign = 0;  // +1 / -1 when not finite

  static Limit of(const Rational& v) { return {true, v, 0}; }
  static Limit infinite(int s) { return {false, Rational(0), s}; }
  friend bool operator==(const Limit&, const Limit&) = default;
};

/// Limit as n -> +infinity (direction = +1) or n -> -infinity (direction = -1).
Limit limit_at_infinity(const RationalFunction& f, int direction);

struct RaySup {
  bool bounded = true;
  Rational sup;
  /// Index where the sup is attained, if it is.
  std::optional<Index> argmax;
};

/// Exact supremum of f over the integers of the ray. Beyond the root-free
/// bound of f' the function is monotone, so the sup is the larger of the
/// finite-segment maximum and the limit. Throws PoleOnRay on a pole.
RaySup sup_on_ray(const RationalFunction& f, Ray ray);

}  // namespace wshift
