#include "wshift/weightspec.hpp"

#include <stdexcept>

#include "wshift/polycert.hpp"

namespace wshift {

RationalFunction TailSpec::function() const {
  if (is_constant()) return RationalFunction::constant(as_constant().value);
  return as_rational().f;
}

TailSpec TailSpec::scaled(const Rational& c) const {
  if (is_constant()) return TailSpec::constant(as_constant().value * c);
  return TailSpec::rational(as_rational().f.scaled(c));
}

namespace {

void check_tail(const TailSpec& tail, const char* side, Ray domain, ValidationReport& report) {
  const std::string where = std::string(side) + " tail";
  if (tail.is_constant()) {
    const Rational& v = tail.as_constant().value;
    if (v == 0) {
      report.violations.push_back({"zero_weight", where + ": zero weight"});
    } else if (v < 0) {
      report.violations.push_back({"negative_weight", where + ": constant must be positive"});
    } else if (v > report.sup_bound) {
      report.sup_bound = v;
    }
    return;
  }
  const RationalFunction& f = tail.as_rational().f;
  if (f.max_degree() > kMaxTailDegree) {
    report.violations.push_back(
        {"degree_cap", where + ": degree exceeds " + std::to_string(kMaxTailDegree)});
    return;
  }
  if (!f.is_zero() && f.degree_excess() > 0) {
    report.violations.push_back(
        {"unbounded_tail", where + ": deg(num) > deg(den), sequence is unbounded"});
    return;
  }
  try {
    const RaySign s = sign_on_ray(f, domain);
    if (s.kind != RaySign::Kind::StrictlyPositive) {
      std::string msg = where + ": modulus must be positive on its domain";
      if (!s.zeros.empty()) {
        msg += " (zero weight at n = " + std::to_string(s.zeros.front()) + ")";
      } else if (s.negative_witness) {
        msg += " (negative at n = " + std::to_string(*s.negative_witness) + ")";
      }
      report.violations.push_back({"nonpositive_tail", msg});
      return;
    }
    const RaySup sup = sup_on_ray(f, domain);
    if (sup.sup > report.sup_bound) report.sup_bound = sup.sup;
  } catch (const PoleOnRay& pole) {
    report.violations.push_back(
        {"tail_pole", where + ": pole on domain at n = " + std::to_string(pole.index())});
  } catch (const std::domain_error& e) {
    report.violations.push_back({"certification", where + ": " + e.what()});
  }
}

}  // namespace

ValidationReport validate(const WeightSpec& spec) {
  ValidationReport report;
  report.sup_bound = 0;
  if (spec.window_values.empty()) {
    report.violations.push_back({"empty_window", "window must hold at least one value"});
  }
  for (std::size_t i = 0; i < spec.window_values.size(); ++i) {
    const Rational& v = spec.window_values[i];
    const Index n = spec.window_start + static_cast<Index>(i);
    if (v == 0) {
      report.violations.push_back({"zero_weight", "zero weight at n = " + std::to_string(n)});
    } else if (v < 0) {
      report.violations.push_back(
          {"negative_weight", "negative modulus at n = " + std::to_string(n)});
    } else if (v > report.sup_bound) {
      report.sup_bound = v;
    }
  }
  if (!spec.window_values.empty()) {
    check_tail(spec.left_tail, "left", Ray::at_most(spec.window_start - 1), report);
    check_tail(spec.right_tail, "right", Ray::at_least(spec.window_end() + 1), report);
  }
  return report;
}

Rational eval_exact(const WeightSpec& spec, Index n) {
  if (n < spec.window_start) {
    if (spec.left_tail.is_constant()) return spec.left_tail.as_constant().value;
    return spec.left_tail.as_rational().f.at(n);
  }
  if (n > spec.window_end()) {
    if (spec.right_tail.is_constant()) return spec.right_tail.as_constant().value;
    return spec.right_tail.as_rational().f.at(n);
  }
  return spec.window_values[static_cast<std::size_t>(n - spec.window_start)];
}

double eval_float(const WeightSpec& spec, Index n) { return to_double(eval_exact(spec, n)); }

WeightSpec scaled(const WeightSpec& spec, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("scale factor must be positive");
  WeightSpec out = spec;
  for (auto& v : out.window_values) v *= c;
  out.left_tail = spec.left_tail.scaled(c);
  out.right_tail = spec.right_tail.scaled(c);
  return out;
}

}  // namespace wshift
