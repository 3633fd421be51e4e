#include "wshift/shiftcalc.hpp"

#include <stdexcept>

namespace wshift {

namespace {

RationalFunction squared_difference(const RationalFunction& f) {
  return f * f - shift_index(f * f, -1);
}

GammaTail make_gamma_tail(const RationalFunction& beta, const RationalFunction& d, int direction) {
  GammaTail tail;
  if (d.is_zero()) {
    tail.flat_zero = true;
    tail.form = RationalFunction::constant(0);
    tail.limit = Limit::of(0);
    return tail;
  }
  tail.form = beta * beta * shift_index(d, 1) / d;
  tail.limit = limit_at_infinity(tail.form, direction);
  return tail;
}

void update_bound(GammaBound& bound, const Rational& value, std::optional<Index> where) {
  if (value > bound.sup) {
    bound.sup = value;
    bound.argmax = where;
  }
}

}  // namespace

QDiagonal::QDiagonal(const WeightSpec& spec)
    : left_form_(squared_difference(spec.left_tail.function())),
      right_form_(squared_difference(spec.right_tail.function())),
      seam_begin_(spec.window_start) {
  for (Index n = spec.window_start; n <= spec.window_end() + 1; ++n) {
    const Rational b = eval_exact(spec, n);
    const Rational a = eval_exact(spec, n - 1);
    seam_.push_back(b * b - a * a);
  }
}

Rational QDiagonal::at(Index n) const {
  if (n < seam_begin_) return left_form_.at(n);
  if (n > seam_end()) return right_form_.at(n);
  return seam_[static_cast<std::size_t>(n - seam_begin_)];
}

QDiagonal q_diagonal(const WeightSpec& spec) { return QDiagonal(spec); }

PinvSqrtEntry pinv_sqrt_diagonal(const QDiagonal& q, Index n) {
  const Rational d = q.at(n);
  if (d < 0) throw NotHyponormalAtIndex(n);
  if (d == 0) return {true, Rational(0)};
  return {false, d};
}

GammaAnalysis::GammaAnalysis(const WeightSpec& spec, const QDiagonal& q,
                             std::optional<Index> flat_zero_from)
    : spec_(spec),
      q_(q),
      window_start_(spec.window_start),
      window_end_(spec.window_end()),
      left_(make_gamma_tail(spec.left_tail.function(), q.left_tail_form(), -1)),
      right_(make_gamma_tail(spec.right_tail.function(), q.right_tail_form(), +1)),
      flat_zero_from_(flat_zero_from) {}

std::optional<Rational> GammaAnalysis::gamma_sq(Index n) const {
  const Rational here = q_.at(n);
  const Rational next = q_.at(n + 1);
  if (here == 0) {
    if (next == 0) return Rational(0);
    return std::nullopt;
  }
  if (n <= left_form_end()) {
    if (auto v = left_.form.try_at(n)) return v;
  } else if (n >= right_form_begin()) {
    if (auto v = right_.form.try_at(n)) return v;
  }
  const Rational beta = eval_exact(spec_, n);
  return beta * beta * next / here;
}

GammaAnalysis gamma_analysis(const WeightSpec& spec, const QDiagonal& q,
                             std::optional<Index> flat_zero_from) {
  return GammaAnalysis(spec, q, flat_zero_from);
}

GammaBound gamma_bounded_on_left_ray(const GammaAnalysis& ga, Index upto) {
  GammaBound out;
  out.sup = 0;
  const Index form_end = std::min(upto, ga.left_form_end());
  if (!ga.left_tail().flat_zero) {
    if (!ga.left_limit().finite) return out;
    const RaySign dsign = sign_on_ray(ga.q().left_tail_form(), Ray::at_most(form_end));
    if (dsign.kind != RaySign::Kind::StrictlyPositive) {
      throw std::logic_error("gamma_bounded_on_left_ray: d_n must be positive on the ray");
    }
    const RaySup sup = sup_on_ray(ga.left_tail().form, Ray::at_most(form_end));
    update_bound(out, sup.sup, sup.argmax);
  } else {
    throw std::logic_error("gamma_bounded_on_left_ray: d_n vanishes on the ray");
  }
  for (Index n = ga.left_form_end() + 1; n <= upto; ++n) {
    if (ga.q().at(n) <= 0) {
      throw std::logic_error("gamma_bounded_on_left_ray: d_n must be positive on the ray");
    }
    update_bound(out, *ga.gamma_sq(n), n);
  }
  out.bounded = true;
  return out;
}

GammaBound gamma_bounded_on_right_ray(const GammaAnalysis& ga, Index from) {
  GammaBound out;
  out.sup = 0;
  const Index form_begin = std::max(from, ga.right_form_begin());
  for (Index n = from; n < form_begin; ++n) {
    const auto g = ga.gamma_sq(n);
    if (!g) throw std::logic_error("gamma_bounded_on_right_ray: gamma undefined on the ray");
    update_bound(out, *g, n);
  }
  if (!ga.right_tail().flat_zero) {
    if (!ga.right_limit().finite) return out;
    const RaySign dsign = sign_on_ray(ga.q().right_tail_form(), Ray::at_least(form_begin));
    if (dsign.kind != RaySign::Kind::StrictlyPositive) {
      throw std::logic_error("gamma_bounded_on_right_ray: d_n must be positive on the ray");
    }
    const RaySup sup = sup_on_ray(ga.right_tail().form, Ray::at_least(form_begin));
    update_bound(out, sup.sup, sup.argmax);
  }
  out.bounded = true;
  return out;
}

}  // namespace wshift
