#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wshift/rational.hpp"

namespace wshift {

/// Dense univariate polynomial in the index variable n over the rationals.
/// Coefficients are ascending; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  /// The polynomial n.
  static Polynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Rational at(Index n) const;

  Polynomial derivative() const;
  /// q(n) = p(n + delta).
  Polynomial shifted(Index delta) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Add, Sub, Mul only; Div is a RationalFunction operation.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic GCD over Q; gcd(0, 0) is the zero polynomial.
Polynomial gcd(Polynomial a, Polynomial b);

/// Reduced quotient of polynomials. The denominator is monic and shares
/// no non-constant factor with the numerator.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction constant(const Rational& c);
  static RationalFunction polynomial(const Polynomial& p);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// deg num - deg den, meaningless for the zero function.
  int degree_excess() const { return num_.degree() - den_.degree(); }
  int max_degree() const { return std::max(num_.degree(), den_.degree()); }

  /// Throws PoleOnRay when the denominator vanishes at n.
  Rational at(Index n) const;
  std::optional<Rational> try_at(Index n) const;

  RationalFunction shifted(Index delta) const;
  RationalFunction scaled(const Rational& c) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when b is identically zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);
RationalFunction shift_index(const RationalFunction& f, Index delta);

std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);

}  // namespace wshift
