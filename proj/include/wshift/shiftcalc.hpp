#pragma once

#include <optional>
#include <vector>

#include "wshift/polycert.hpp"
#include "wshift/weightspec.hpp"

namespace wshift {

/// Diagonal of the self-commutator T*T - TT*, d_n = |beta_n|^2 - |beta_{n-1}|^2.
///
/// Indices n < L use the left tail form, n > R + 1 the right tail form; the
/// seam indices L..R+1 mix regions and are stored explicitly.
class QDiagonal {
 public:
  explicit QDiagonal(const WeightSpec& spec);

  Rational at(Index n) const;

  /// f(n)^2 - f(n-1)^2 for the left tail f; valid for n < L.
  const RationalFunction& left_tail_form() const { return left_form_; }
  /// g(n)^2 - g(n-1)^2 for the right tail g; valid for n > R + 1.
  const RationalFunction& right_tail_form() const { return right_form_; }
  const std::vector<Rational>& seam_values() const { return seam_; }
  Index seam_begin() const { return seam_begin_; }
  Index seam_end() const { return seam_begin_ + static_cast<Index>(seam_.size()) - 1; }

 private:
  RationalFunction left_form_;
  RationalFunction right_form_;
  Index seam_begin_;
  std::vector<Rational> seam_;
};

QDiagonal q_diagonal(const WeightSpec& spec);

/// Diagonal entry of the pseudoinverse root: 1/sqrt(operand) or zero.
/// The square root is never taken; only the operand d_n is carried.
struct PinvSqrtEntry {
  bool zero;
  Rational operand;
};

/// Throws NotHyponormalAtIndex when d_n < 0.
PinvSqrtEntry pinv_sqrt_diagonal(const QDiagonal& q, Index n);

/// One side of the transformed sequence gamma_n^2 = |beta_n|^2 d_{n+1} / d_n.
struct GammaTail {
  /// The side's d is identically zero, so every gamma^2 there is 0.
  bool flat_zero = false;
  RationalFunction form;
  Limit limit;
};

/// gamma_n^2, the squared weights of Q^{1/2} T Q^{+1/2}, exactly.
class GammaAnalysis {
 public:
  GammaAnalysis(const WeightSpec& spec, const QDiagonal& q, std::optional<Index> flat_zero_from);

  /// nullopt where d_n = 0 < d_{n+1}; 0 where d_n = d_{n+1} = 0.
  std::optional<Rational> gamma_sq(Index n) const;

  /// Valid for n <= L - 2.
  const GammaTail& left_tail() const { return left_; }
  /// Valid for n >= R + 2.
  const GammaTail& right_tail() const { return right_; }
  const Limit& left_limit() const { return left_.limit; }
  const Limit& right_limit() const { return right_.limit; }
  /// First index of the region where every gamma^2 vanishes (the flat part after k).
  std::optional<Index> flat_zero_from() const { return flat_zero_from_; }

  Index left_form_end() const { return window_start_ - 2; }
  Index right_form_begin() const { return window_end_ + 2; }

  const WeightSpec& spec() const { return spec_; }
  const QDiagonal& q() const { return q_; }

 private:
  WeightSpec spec_;
  QDiagonal q_;
  Index window_start_;
  Index window_end_;
  GammaTail left_;
  GammaTail right_;
  std::optional<Index> flat_zero_from_;
};

GammaAnalysis gamma_analysis(const WeightSpec& spec, const QDiagonal& q,
                             std::optional<Index> flat_zero_from = std::nullopt);

struct GammaBound {
  bool bounded = false;
  /// Exact sup of gamma^2 over n <= upto.
  Rational sup;
  std::optional<Index> argmax;
};

/// Supremum of gamma^2 over n <= upto. Requires d_n > 0 for every such n;
/// violating that is a logic error.
GammaBound gamma_bounded_on_left_ray(const GammaAnalysis& ga, Index upto);

/// Supremum of gamma^2 over n >= from. Same precondition on that ray, except
/// that gamma^2 may vanish (d_{n+1} = 0) where d_n > 0.
GammaBound gamma_bounded_on_right_ray(const GammaAnalysis& ga, Index from);

}  // namespace wshift
