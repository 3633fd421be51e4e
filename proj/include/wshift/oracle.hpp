#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wshift/dense.hpp"
#include "wshift/weightspec.hpp"

namespace wshift {

/// Any bi-infinite modulus sequence, as floats. Lets the oracle run on
/// sequences outside the closed-form family.
using WeightSource = std::function<double(Index)>;

/// Null-space threshold relative to max |beta|^2.
inline constexpr double kDefaultRelativeTol = 1e-9;

/// Compression of T to span{e_{-N}, ..., e_N}; row i holds basis index i - N.
struct Truncation {
  Index half_width = 0;
  Matrix t;
  /// Absolute threshold below which a magnitude counts as zero.
  double tol = 0.0;
  double max_weight_sq = 0.0;

  std::size_t dim() const { return t.rows(); }
  std::size_t row_of(Index n) const { return static_cast<std::size_t>(n + half_width); }
  Index index_of(std::size_t row) const { return static_cast<Index>(row) - half_width; }
  /// |n| <= N - 2: rows unaffected by the cut.
  bool interior(Index n) const { return n >= -(half_width - 2) && n <= half_width - 2; }
};

Truncation build_truncation(const WeightSpec& spec, Index half_width,
                            double relative_tol = kDefaultRelativeTol);
Truncation build_truncation(const WeightSource& weights, Index half_width,
                            double relative_tol = kDefaultRelativeTol);

/// T^T T - T T^T by dense products. Its first and last diagonal entries are
/// truncation artifacts (the last is negative).
Matrix commutator_q(const Truncation& t);

/// Rows and columns -N+1 .. N-1 of a full-size matrix, where Q is exact.
Matrix exact_block(const Truncation& t, const Matrix& full);

/// Moore-Penrose inverse of the PSD square root of q, eigenvalues <= tol
/// treated as zero. Throws NotPSD for an entry or eigenvalue below -tol.
Matrix pinv_half(const Matrix& q, double tol);
/// PSD square root of q under the same threshold.
Matrix sqrt_half(const Matrix& q, double tol);

/// Q^{1/2} T Q^{+1/2} on the exact block (basis indices -N+1 .. N-1); its
/// subdiagonal entry at column n carries gamma_n.
Matrix transformed_operator(const Truncation& t, const Matrix& q, double tol);

struct InvarianceViolation {
  Index index;
  double magnitude;
};

/// Interior e_n with |Q_nn| <= tol whose image T e_n leaves the numerical
/// null space: ||Q T e_n|| > sqrt(tol).
std::vector<InvarianceViolation> invariance_check(const Truncation& t, const Matrix& q, double tol);

/// Largest singular value by power iteration on s^T s.
double spectral_norm(const Matrix& s, double rel_accuracy = 1e-8);

struct NormSample {
  Index half_width;
  double norm;
};

std::vector<NormSample> norm_sweep(const WeightSpec& spec, std::span<const Index> half_widths,
                                   double relative_tol = kDefaultRelativeTol);
std::vector<NormSample> norm_sweep(const WeightSource& weights, std::span<const Index> half_widths,
                                   double relative_tol = kDefaultRelativeTol);

/// Float oracle cross-checked against the exact engine at one truncation.
struct TruncationReport {
  Index half_width = 0;
  double tol = 0.0;
  double max_weight_sq = 0.0;
  double q_diag_residual = 0.0;
  double q_offdiag_residual = 0.0;
  /// Max |S_{n+1,n} - sqrt(gamma_n^2)| over interior n where gamma is defined.
  double gamma_residual = 0.0;
  /// Interior indices left out of gamma_residual because d_n or d_{n+1} is
  /// positive but within twice the threshold.
  Index gamma_unresolved = 0;
  /// Max |S_{n+1,n}| over interior n with gamma_n^2 = 0.
  double flat_zero_max = 0.0;
  std::vector<InvarianceViolation> invariance_violations;
  std::vector<NormSample> norm_trace;
};

/// Builds the truncation at the largest half-width, compares it with the
/// exact engine, and sweeps the norm over every half-width given.
/// Throws NotHyponormalAtIndex(n), |beta_n| > |beta_{n+1}|, if the truncated Q is not PSD.
TruncationReport truncation_report(const WeightSpec& spec, std::span<const Index> half_widths,
                                   double relative_tol = kDefaultRelativeTol);

}  // namespace wshift
