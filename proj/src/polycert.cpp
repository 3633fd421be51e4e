#include "wshift/polycert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wshift {

namespace {

Index to_index_checked(const Integer& z) {
  if (!z.fits_slong_p()) throw std::domain_error("root bound does not fit an index");
  return static_cast<Index>(z.get_si());
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Sign of p(n) as n runs to +/-infinity.
int asymptotic_sign(const Polynomial& p, int direction) {
  int s = sgn(p.leading());
  if (direction < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

// Integers of the ray within [-bound-1, bound+1], plus the endpoint if it lies
// outside. The extra step past the bound supplies an asymptotic witness.
std::pair<Index, Index> evaluation_segment(Ray ray, Index bound) {
  const Index reach = bound + 1;
  Index lo, hi;
  if (ray.direction == Ray::Direction::AtLeast) {
    lo = ray.endpoint;
    hi = std::max(ray.endpoint, reach);
  } else {
    hi = ray.endpoint;
    lo = std::min(ray.endpoint, -reach);
  }
  if (hi - lo > kMaxCertificationSegment) {
    throw std::domain_error("certification segment too long; coefficients too large");
  }
  return {lo, hi};
}

}  // namespace

bool RaySign::nonnegative() const {
  return kind == Kind::StrictlyPositive || kind == Kind::IdenticallyZero ||
         (kind == Kind::HasZeroAt && !negative_witness);
}

bool RaySign::nonpositive() const {
  return kind == Kind::StrictlyNegative || kind == Kind::IdenticallyZero ||
         (kind == Kind::HasZeroAt && !positive_witness);
}

const char* to_string(RaySign::Kind kind) {
  switch (kind) {
    case RaySign::Kind::StrictlyPositive: return "StrictlyPositive";
    case RaySign::Kind::StrictlyNegative: return "StrictlyNegative";
    case RaySign::Kind::IdenticallyZero: return "IdenticallyZero";
    case RaySign::Kind::HasZeroAt: return "HasZeroAt";
    case RaySign::Kind::MixedSign: return "MixedSign";
  }
  return "?";
}

Index integer_root_free_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational worst = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    worst = std::max(worst, Rational(abs(p.coefficients()[i]) / lead));
  }
  return to_index_checked(ceil_of(Rational(worst + 1)));
}

namespace {

// Smallest r >= 0 with r^k >= t.
Integer ceil_root(const Rational& t, int k) {
  if (t <= 0) return 0;
  Integer r = static_cast<long>(std::ceil(std::pow(t.get_d(), 1.0 / k)));
  auto pow_k = [k](const Integer& x) {
    Integer out = 1;
    for (int i = 0; i < k; ++i) out *= x;
    return out;
  };
  while (r > 0 && Rational(pow_k(r - 1)) >= t) --r;
  while (Rational(pow_k(r)) < t) ++r;
  return r;
}

}  // namespace

Index fujiwara_root_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  const int d = p.degree();
  if (d == 0) return 1;
  const Rational lead = p.leading();
  Integer widest = 0;
  for (int i = 1; i <= d; ++i) {
    Rational t = abs(p.coefficients()[static_cast<std::size_t>(d - i)] / lead);
    if (i == d) t /= 2;
    widest = std::max(widest, ceil_root(t, i));
  }
  return to_index_checked(Integer(2 * widest + 1));
}

Index certification_root_bound(const Polynomial& p) {
  return std::min(integer_root_free_bound(p), fujiwara_root_bound(p));
}

RaySign sign_on_ray(const RationalFunction& f, Ray ray) {
  const Index bound = f.is_zero() ? certification_root_bound(f.den())
                                  : std::max(certification_root_bound(f.num()),
                                             certification_root_bound(f.den()));
  const auto [lo, hi] = evaluation_segment(ray, bound);

  RaySign out;
  // Walk outward from the endpoint so the first witness found is the nearest.
  const Index step = ray.orientation();
  const Index start = ray.endpoint;
  const Index stop = step > 0 ? hi : lo;
  for (Index n = start;; n += step) {
    const auto value = f.try_at(n);
    if (!value) throw PoleOnRay(n);
    const int s = sgn(*value);
    if (s == 0) {
      out.zeros.push_back(n);
    } else if (s > 0) {
      if (!out.positive_witness) out.positive_witness = n;
    } else {
      if (!out.negative_witness) out.negative_witness = n;
    }
    if (n == stop) break;
  }
  if (f.is_zero()) {
    out.zeros.clear();
    out.kind = RaySign::Kind::IdenticallyZero;
    return out;
  }
  // Past the bound neither numerator nor denominator changes sign, and the
  // segment includes one point there, so the witnesses already cover it.
  std::sort(out.zeros.begin(), out.zeros.end());
  const bool pos = out.positive_witness.has_value();
  const bool neg = out.negative_witness.has_value();
  if (pos && neg) {
    out.kind = RaySign::Kind::MixedSign;
  } else if (!out.zeros.empty()) {
    out.kind = RaySign::Kind::HasZeroAt;
  } else {
    out.kind = pos ? RaySign::Kind::StrictlyPositive : RaySign::Kind::StrictlyNegative;
  }
  return out;
}

Limit limit_at_infinity(const RationalFunction& f, int direction) {
  if (f.is_zero()) return Limit::of(0);
  const int excess = f.degree_excess();
  if (excess < 0) return Limit::of(0);
  if (excess == 0) return Limit::of(f.num().leading() / f.den().leading());
  return Limit::infinite(asymptotic_sign(f.num(), direction) *
                         asymptotic_sign(f.den(), direction));
}

RaySup sup_on_ray(const RationalFunction& f, Ray ray) {
  const Limit limit = limit_at_infinity(f, ray.orientation());
  if (!limit.finite && limit.infinite_sign > 0) {
    // Still reject poles on the ray before reporting unboundedness.
    (void)sign_on_ray(RationalFunction::polynomial(f.den()), ray);
    return {false, Rational(0), std::nullopt};
  }
  // Critical points lie within the root-free bound of p'q - pq'.
  const Polynomial slope = f.num().derivative() * f.den() - f.num() * f.den().derivative();
  Index bound = certification_root_bound(f.den());
  if (!f.is_zero()) bound = std::max(bound, certification_root_bound(f.num()));
  if (!slope.is_zero()) bound = std::max(bound, certification_root_bound(slope));
  const auto [lo, hi] = evaluation_segment(ray, bound);

  RaySup out;
  bool have = false;
  for (Index n = lo; n <= hi; ++n) {
    const auto value = f.try_at(n);
    if (!value) throw PoleOnRay(n);
    if (!have || *value > out.sup) {
      out.sup = *value;
      out.argmax = n;
      have = true;
    }
  }
  if (limit.finite && limit.value > out.sup) {
    out.sup = limit.value;
    out.argmax.reset();
  }
  return out;
}

}  // namespace wshift
