#include <doctest.h>

#include <random>

#include "support/random_poly.hpp"
#include "wshift/polycert.hpp"

using namespace wshift;

namespace {

using testing::Observed;
using testing::observe;
using testing::random_poly;

Polynomial P(std::initializer_list<long> c) { return testing::poly(c); }

RationalFunction F(const Polynomial& num, const Polynomial& den = Polynomial::constant(1)) {
  return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("poly_arith") {
  CHECK(poly_arith(P({1, 1}), P({-1, 1}), ArithOp::Mul) == P({-1, 0, 1}));
  CHECK(poly_arith(P({3, 0, 2}), Polynomial(), ArithOp::Add) == P({3, 0, 2}));
  CHECK(poly_arith(P({0, 2}), P({0, 2}), ArithOp::Sub).is_zero());
  CHECK_THROWS(poly_arith(P({1}), P({1}), ArithOp::Div));
}

TEST_CASE("shift_index") {
  CHECK(shift_index(F(P({1}), P({0, 1})), 1) == F(P({1}), P({1, 1})));
  // 2 - 1/n shifted by -1 is 2 - 1/(n - 1) = (2n - 3)/(n - 1)
  CHECK(shift_index(F(P({-1, 2}), P({0, 1})), -1) == F(P({-3, 2}), P({-1, 1})));
  CHECK(shift_index(RationalFunction::constant(Rational(5, 7)), 42) ==
        RationalFunction::constant(Rational(5, 7)));
}

TEST_CASE("shift round trip and reduction on random functions") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const RationalFunction f = F(random_poly(rng, 4, true), random_poly(rng, 4, true));
    const Index d = static_cast<Index>(rng() % 41) - 20;
    CHECK(shift_index(shift_index(f, d), -d) == f);
    const RationalFunction g = F(random_poly(rng, 3, true), random_poly(rng, 3, true));
    for (auto op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul}) {
      const RationalFunction h = rf_arith(f, g, op);
      CHECK(gcd(h.num(), h.den()).degree() <= 0);
      CHECK(h.den().leading() == 1);
    }
    if (!g.is_zero()) {
      const RationalFunction h = rf_arith(f, g, ArithOp::Div);
      CHECK(gcd(h.num(), h.den()).degree() <= 0);
      // pointwise agreement away from poles and zeros
      for (Index n = -5; n <= 5; ++n) {
        const auto fv = f.try_at(n), gv = g.try_at(n), hv = h.try_at(n);
        if (fv && gv && *gv != 0 && hv) CHECK(*hv == *fv / *gv);
      }
    }
  }
}

TEST_CASE("rf_arith") {
  const RationalFunction inv = F(P({1}), P({0, 1}));
  CHECK(rf_arith(inv, inv, ArithOp::Mul) == F(P({1}), P({0, 0, 1})));
  CHECK(rf_arith(inv, inv, ArithOp::Sub).is_zero());
  const RationalFunction a = F(P({-1, 0, 1}), P({0, 0, 1}));
  const RationalFunction b = F(P({-1, 1}), P({0, 1}));
  CHECK(rf_arith(a, b, ArithOp::Div) == F(P({1, 1}), P({0, 1})));
  CHECK_THROWS_AS(rf_arith(a, RationalFunction(), ArithOp::Div), std::domain_error);
}

TEST_CASE("gcd is monic and divides both") {
  const Polynomial a = P({-1, 0, 1}) * P({3, 1});
  const Polynomial b = P({-2, 2}) * P({5, 0, 1});
  const Polynomial g = gcd(a, b);
  CHECK(g == P({-1, 1}));
  CHECK(divmod(a, g).second.is_zero());
  CHECK(divmod(b, g).second.is_zero());
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("integer_root_free_bound") {
  CHECK(integer_root_free_bound(P({-10, 1})) == 11);
  CHECK(integer_root_free_bound(P({5})) == 1);
  CHECK(integer_root_free_bound(P({-4, 0, 1})) == 5);
  CHECK(integer_root_free_bound(Polynomial({Rational(1, 3), Rational(2)})) == 2);
  CHECK_THROWS_AS(integer_root_free_bound(Polynomial()), std::domain_error);
}

TEST_CASE("sign_on_ray examples") {
  SUBCASE("-1/n on n <= -1") {
    const RaySign s = sign_on_ray(F(P({-1}), P({0, 1})), Ray::at_most(-1));
    CHECK(s.kind == RaySign::Kind::StrictlyPositive);
  }
  SUBCASE("n^2 - 4 from n = 1 changes sign at 1") {
    // f(1) = -3, so the ray starting at 1 is mixed, with the zero at 2.
    const RaySign s = sign_on_ray(F(P({-4, 0, 1})), Ray::at_least(1));
    CHECK(s.kind == RaySign::Kind::MixedSign);
    CHECK(s.zeros == std::vector<Index>{2});
    CHECK(s.negative_witness == 1);
    CHECK(s.positive_witness == 3);
  }
  SUBCASE("n^2 - 4 from n = 2") {
    const RaySign s = sign_on_ray(F(P({-4, 0, 1})), Ray::at_least(2));
    CHECK(s.kind == RaySign::Kind::HasZeroAt);
    CHECK(s.zeros == std::vector<Index>{2});
    CHECK(s.nonnegative());
  }
  SUBCASE("n on n <= 3") {
    const RaySign s = sign_on_ray(F(P({0, 1})), Ray::at_most(3));
    CHECK(s.kind == RaySign::Kind::MixedSign);
    CHECK(s.positive_witness == 3);
    CHECK(s.negative_witness == -1);
    CHECK(s.zeros == std::vector<Index>{0});
  }
  SUBCASE("zero function") {
    CHECK(sign_on_ray(RationalFunction(), Ray::at_least(0)).kind ==
          RaySign::Kind::IdenticallyZero);
  }
  SUBCASE("pole") {
    try {
      sign_on_ray(F(P({1}), P({-7, 1})), Ray::at_least(0));
      FAIL("expected PoleOnRay");
    } catch (const PoleOnRay& e) {
      CHECK(e.index() == 7);
    }
    CHECK_NOTHROW(sign_on_ray(F(P({1}), P({-7, 1})), Ray::at_least(8)));
  }
}

TEST_CASE("sign_on_ray matches brute force on 200 random functions") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const RationalFunction f = F(random_poly(rng, 4, true), random_poly(rng, 2, i % 3 == 0));
    const Index a = static_cast<Index>(rng() % 61) - 30;
    const bool up = rng() % 2;
    const Ray ray = up ? Ray::at_least(a) : Ray::at_most(a);
    const Observed o = up ? observe(f, a, a + 10000) : observe(f, a - 10000, a);
    CAPTURE(to_string(f));
    CAPTURE(a);
    CAPTURE(up);
    if (o.pole) {
      CHECK_THROWS_AS(sign_on_ray(f, ray), PoleOnRay);
      continue;
    }
    const RaySign s = sign_on_ray(f, ray);
    const std::vector<Index>& zeros = o.zeros;
    if (f.is_zero()) {
      CHECK(s.kind == RaySign::Kind::IdenticallyZero);
      continue;
    }
    CHECK(s.zeros == zeros);
    CHECK(s.positive_witness.has_value() == o.pos);
    CHECK(s.negative_witness.has_value() == o.neg);
    if (s.positive_witness) CHECK(f.at(*s.positive_witness) > 0);
    if (s.negative_witness) CHECK(f.at(*s.negative_witness) < 0);
    if (o.pos && o.neg) {
      CHECK(s.kind == RaySign::Kind::MixedSign);
    } else if (!zeros.empty()) {
      CHECK(s.kind == RaySign::Kind::HasZeroAt);
    } else {
      CHECK(s.kind == (o.pos ? RaySign::Kind::StrictlyPositive : RaySign::Kind::StrictlyNegative));
    }
  }
}

TEST_CASE("limit_at_infinity examples") {
  const Limit a = limit_at_infinity(F(P({1}), P({0, 1})), -1);
  CHECK(a.finite);
  CHECK(a.value == 0);
  const Limit b = limit_at_infinity(F(P({-1, 2}), P({0, 1})), 1);
  CHECK(b.finite);
  CHECK(b.value == 2);
  const Limit c = limit_at_infinity(F(P({0, 0, 1}), P({1, 1})), 1);
  CHECK_FALSE(c.finite);
  CHECK(c.infinite_sign == 1);
  // n^3 / (n + 1) at -infinity: +infinity; n^2/(n+1) at -infinity: -infinity
  CHECK(limit_at_infinity(F(P({0, 0, 0, 1}), P({1, 1})), -1).infinite_sign == 1);
  CHECK(limit_at_infinity(F(P({0, 0, 1}), P({1, 1})), -1).infinite_sign == -1);
}

namespace {

Rational abs_sum_at(const Polynomial& p, const Rational& x, int upto_degree) {
  Rational s = 0, xp = 1;
  for (int i = 0; i <= upto_degree && i <= p.degree(); ++i) {
    s += abs(p.coefficients()[static_cast<std::size_t>(i)]) * xp;
    xp *= x;
  }
  return s;
}

// |f(x) - L| <= sum|r_i| x^i / (|q_m| x^m - sum_{i<m} |q_i| x^i) with r = p - L q, x = |n|.
Rational tail_bound(const RationalFunction& f, const Rational& limit, const Rational& x) {
  const Polynomial r = f.num() - f.den().scaled(limit);
  const int m = f.den().degree();
  Rational lead_term = abs(f.den().leading());
  for (int i = 0; i < m; ++i) lead_term *= x;
  const Rational below = abs_sum_at(f.den(), x, m - 1);
  return abs_sum_at(r, x, r.degree()) / (lead_term - below);
}

}  // namespace

TEST_CASE("limit_at_infinity against exact evaluation at +-10^9") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Polynomial num = random_poly(rng, 3, false);
    const Polynomial den = random_poly(rng, 3, false);
    if (num.degree() > den.degree()) continue;
    const RationalFunction f = F(num, den);
    for (int dir : {1, -1}) {
      const Limit l = limit_at_infinity(f, dir);
      REQUIRE(l.finite);
      const Index n = dir * Index{1'000'000'000};
      const Rational eps = tail_bound(f, l.value, Rational(1'000'000'000));
      CHECK(eps >= 0);
      CHECK(abs(f.at(n) - l.value) <= eps);
      // the bound is informative: small relative to the limit scale
      CHECK(eps < Rational(1, 1000));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("sup_on_ray matches brute force where it is attained") {
  // 4/(n^2 + 1) on n <= -1: decreasing toward -infinity, sup 2 at -1.
  const RaySup a = sup_on_ray(F(P({4}), P({1, 0, 1})), Ray::at_most(-1));
  CHECK(a.bounded);
  CHECK(a.sup == 2);
  CHECK(a.argmax == -1);
  // (2n - 1)/n on n >= 1 approaches 2 but never reaches it.
  const RaySup b = sup_on_ray(F(P({-1, 2}), P({0, 1})), Ray::at_least(1));
  CHECK(b.bounded);
  CHECK(b.sup == 2);
  CHECK_FALSE(b.argmax);
  // n on n >= 0 is unbounded.
  CHECK_FALSE(sup_on_ray(F(P({0, 1})), Ray::at_least(0)).bounded);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Polynomial den = random_poly(rng, 3, false) * random_poly(rng, 0, false);
    Polynomial num = random_poly(rng, den.degree(), true);
    const RationalFunction f = F(num, den);
    const Index a = static_cast<Index>(rng() % 21) - 10;
    const Ray ray = Ray::at_least(a);
    const Observed o = observe(f, a, a + 2000);
    if (o.pole) continue;
    const RaySup s = sup_on_ray(f, ray);
    REQUIRE(s.bounded);
    Rational seen = f.at(a);
    for (Index n = a; n <= a + 2000; ++n) seen = std::max(seen, f.at(n));
    CHECK(s.sup >= seen);
    if (s.argmax) {
      CHECK(f.at(*s.argmax) == s.sup);
    } else {
      CHECK(s.sup == limit_at_infinity(f, 1).value);
    }
  }
}

TEST_CASE("fujiwara bound encloses every root and is tight for clustered roots") {
  // (n - 4)^6 (n - 5)^6: Cauchy is in the millions, the roots are at 4 and 5.
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < 6; ++i) p = p * P({-4, 1}) * P({-5, 1});
  CHECK(integer_root_free_bound(p) > 1'000'000);
  const Index b = fujiwara_root_bound(p);
  CHECK(b > 5);
  CHECK(b < 200);
  CHECK(certification_root_bound(p) == b);
  CHECK(fujiwara_root_bound(P({7})) == 1);
  CHECK(certification_root_bound(P({-10, 1})) <= 11);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Polynomial q = random_poly(rng, 6, true);
    const Index fb = fujiwara_root_bound(q);
    // no sign change and no zero beyond the bound
    const int right = sgn(q.at(fb));
    for (Index n = fb; n <= fb + 50; ++n) CHECK(sgn(q.at(n)) == right);
    const int left = sgn(q.at(-fb));
    for (Index n = -fb; n >= -fb - 50; --n) CHECK(sgn(q.at(n)) == left);
    CHECK(right != 0);
  }
}
