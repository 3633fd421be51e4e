#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "wshift/errors.hpp"

namespace wshift {

// GMP rationals are kept canonical by every arithmetic operator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "[+-]digits[/digits]" with no whitespace. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" form, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Nearest binary64 value (round-half-even).
double to_double(const Rational& q);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& q, int digits = 12);

/// Square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

Rational from_index(Index n);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace wshift
