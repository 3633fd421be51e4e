#include "wshift/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wshift {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational Polynomial::at(Index n) const { return (*this)(from_index(n)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(Index delta) const {
  // Horner in the composed variable: acc <- acc * (n + delta) + c_i.
  const Polynomial linear({from_index(delta), Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: break;
  }
  throw std::invalid_argument("poly_arith: division is not closed over polynomials");
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const Rational factor = rem[i] / lead;
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    // Content normalization keeps intermediate coefficients small.
    b = r.monic();
  }
  return a.monic();
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;
  const Rational lead = d.leading();
  num_ = n.scaled(1 / lead);
  den_ = d.scaled(1 / lead);
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1));
}

RationalFunction RationalFunction::polynomial(const Polynomial& p) {
  return RationalFunction(p, Polynomial::constant(1));
}

Rational RationalFunction::at(Index n) const {
  const Rational x = from_index(n);
  const Rational d = den_(x);
  if (d == 0) throw PoleOnRay(n);
  return num_(x) / d;
}

std::optional<Rational> RationalFunction::try_at(Index n) const {
  const Rational x = from_index(n);
  const Rational d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

RationalFunction RationalFunction::shifted(Index delta) const {
  return RationalFunction(num_.shifted(delta), den_.shifted(delta));
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  return RationalFunction(num_.scaled(c), den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("rf_arith: unknown op");
}

RationalFunction shift_index(const RationalFunction& f, Index delta) { return f.shifted(delta); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i >= 1) out += (i == 0 || mag != 1) ? "*n" : "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_string(const RationalFunction& f) {
  if (f.den().degree() == 0) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace wshift
