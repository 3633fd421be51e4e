#include "wshift/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wshift/shiftcalc.hpp"

namespace wshift {

Truncation build_truncation(const WeightSource& weights, Index half_width, double relative_tol) {
  if (half_width < 2) throw std::invalid_argument("truncation half-width must be at least 2");
  Truncation out;
  out.half_width = half_width;
  out.t = Matrix(static_cast<std::size_t>(2 * half_width + 1),
                 static_cast<std::size_t>(2 * half_width + 1));
  for (Index n = -half_width; n <= half_width - 1; ++n) {
    const double w = weights(n);
    out.t(out.row_of(n + 1), out.row_of(n)) = w;
    out.max_weight_sq = std::max(out.max_weight_sq, w * w);
  }
  out.tol = relative_tol * out.max_weight_sq;
  return out;
}

Truncation build_truncation(const WeightSpec& spec, Index half_width, double relative_tol) {
  return build_truncation([&spec](Index n) { return eval_float(spec, n); }, half_width,
                          relative_tol);
}

Matrix commutator_q(const Truncation& t) { return kernels::self_commutator(t.t); }

Matrix exact_block(const Truncation& t, const Matrix& full) {
  return full.block(1, t.dim() - 2);
}

namespace {

enum class Root { Plain, Pseudoinverse };

double root_of(double value, double tol, Root kind) {
  if (value <= tol) return 0.0;
  return kind == Root::Plain ? std::sqrt(value) : 1.0 / std::sqrt(value);
}

Matrix psd_root(const Matrix& q, double tol, Root kind) {
  if (q.rows() != q.cols()) throw std::invalid_argument("psd_root: matrix must be square");
  const std::size_t n = q.rows();
  if (kernels::max_abs_offdiagonal(q) <= tol) {
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (q(i, i) < -tol) throw NotPSD(i, q(i, i));
      diag[i] = root_of(q(i, i), tol, kind);
    }
    return Matrix::diagonal(diag);
  }
  Eigen::MatrixXd dense(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dense(i, j) = 0.5 * (q(i, j) + q(j, i));
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense);
  const Eigen::VectorXd& values = eig.eigenvalues();
  const Eigen::MatrixXd& vectors = eig.eigenvectors();
  Eigen::VectorXd mapped(n);
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) < -tol) {
      Eigen::Index row = 0;
      vectors.col(k).cwiseAbs().maxCoeff(&row);
      throw NotPSD(static_cast<std::size_t>(row), values(k));
    }
    mapped(k) = root_of(values(k), tol, kind);
  }
  const Eigen::MatrixXd root = vectors * mapped.asDiagonal() * vectors.transpose();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = root(i, j);
  }
  return out;
}

}  // namespace

Matrix pinv_half(const Matrix& q, double tol) { return psd_root(q, tol, Root::Pseudoinverse); }

Matrix sqrt_half(const Matrix& q, double tol) { return psd_root(q, tol, Root::Plain); }

Matrix transformed_operator(const Truncation& t, const Matrix& q, double tol) {
  const Matrix qb = exact_block(t, q);
  const Matrix tb = exact_block(t, t.t);
  return kernels::multiply(kernels::multiply(sqrt_half(qb, tol), tb), pinv_half(qb, tol));
}

std::vector<InvarianceViolation> invariance_check(const Truncation& t, const Matrix& q, double tol) {
  std::vector<InvarianceViolation> out;
  const double threshold = std::sqrt(tol);
  for (Index n = -(t.half_width - 2); n <= t.half_width - 2; ++n) {
    const std::size_t col = t.row_of(n);
    if (std::abs(q(col, col)) > tol) continue;
    // Q (T e_n) as a combination of the columns of Q picked out by T e_n.
    std::vector<double> qimage(t.dim(), 0.0);
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const double tj = t.t(j, col);
      if (tj == 0.0) continue;
      for (std::size_t i = 0; i < t.dim(); ++i) qimage[i] += q(i, j) * tj;
    }
    const double mag =
        std::sqrt(std::inner_product(qimage.begin(), qimage.end(), qimage.begin(), 0.0));
    if (mag > threshold) out.push_back({n, mag});
  }
  return out;
}

double spectral_norm(const Matrix& s, double rel_accuracy) {
  const Matrix gram = kernels::multiply_transpose_left(s, s);
  const std::vector<RowSpan> spans = kernels::row_spans(gram);
  const std::size_t n = gram.rows();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double estimate = 0.0;
  // The Rayleigh quotient of a PSD matrix never decreases under power
  // iteration; stop once it has stalled well below the requested accuracy.
  constexpr int kMaxIterations = 200000;
  const double stall = rel_accuracy * 1e-4;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<double> w = kernels::matvec_banded(gram, spans, v);
    const double rayleigh = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    const double len = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
    if (len == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / len;
    if (iter > 0 && std::abs(rayleigh - estimate) <= stall * rayleigh) {
      estimate = rayleigh;
      break;
    }
    estimate = rayleigh;
  }
  return std::sqrt(estimate);
}

std::vector<NormSample> norm_sweep(const WeightSource& weights, std::span<const Index> half_widths,
                                   double relative_tol) {
  if (!std::is_sorted(half_widths.begin(), half_widths.end())) {
    throw std::invalid_argument("norm_sweep: half-widths must be ascending");
  }
  std::vector<NormSample> trace;
  for (Index n : half_widths) {
    const Truncation t = build_truncation(weights, n, relative_tol);
    const Matrix q = commutator_q(t);
    trace.push_back({n, spectral_norm(transformed_operator(t, q, t.tol))});
  }
  return trace;
}

std::vector<NormSample> norm_sweep(const WeightSpec& spec, std::span<const Index> half_widths,
                                   double relative_tol) {
  return norm_sweep([&spec](Index n) { return eval_float(spec, n); }, half_widths, relative_tol);
}

TruncationReport truncation_report(const WeightSpec& spec, std::span<const Index> half_widths,
                                   double relative_tol) {
  if (half_widths.empty()) throw std::invalid_argument("truncation_report: no half-widths");
  const Index big = *std::max_element(half_widths.begin(), half_widths.end());
  const Truncation t = build_truncation(spec, big, relative_tol);
  const Matrix q = commutator_q(t);

  TruncationReport report;
  report.half_width = big;
  report.tol = t.tol;
  report.max_weight_sq = t.max_weight_sq;

  const QDiagonal exact_q(spec);
  const GammaAnalysis exact_gamma(spec, exact_q, std::nullopt);
  for (Index n = -(big - 2); n <= big - 2; ++n) {
    const std::size_t i = t.row_of(n);
    report.q_diag_residual =
        std::max(report.q_diag_residual, std::abs(q(i, i) - to_double(exact_q.at(n))));
    for (Index m = -(big - 2); m <= big - 2; ++m) {
      if (m == n) continue;
      report.q_offdiag_residual = std::max(report.q_offdiag_residual, std::abs(q(i, t.row_of(m))));
    }
  }

  Matrix s;
  try {
    s = transformed_operator(t, q, t.tol);
  } catch (const NotPSD& e) {
    // Block row r is basis index r - N + 1; a negative d there is the drop
    // from the pair one index lower.
    throw NotHyponormalAtIndex(t.index_of(e.row()));
  }
  // Block row r holds basis index r - N + 1.
  auto block_row = [big](Index n) { return static_cast<std::size_t>(n + big - 1); };
  for (Index n = -(big - 2); n <= big - 2; ++n) {
    const double entry = s(block_row(n + 1), block_row(n));
    const auto g = exact_gamma.gamma_sq(n);
    if (!g) continue;
    // d below the threshold is numerically null; gamma there is not comparable.
    const double d0 = to_double(exact_q.at(n));
    const double d1 = to_double(exact_q.at(n + 1));
    if ((d0 > 0 && d0 <= 2 * t.tol) || (d1 > 0 && d1 <= 2 * t.tol)) {
      ++report.gamma_unresolved;
      continue;
    }
    if (*g == 0) {
      report.flat_zero_max = std::max(report.flat_zero_max, std::abs(entry));
    } else {
      report.gamma_residual =
          std::max(report.gamma_residual, std::abs(entry - std::sqrt(to_double(*g))));
    }
  }
  report.invariance_violations = invariance_check(t, q, t.tol);

  std::vector<Index> sorted(half_widths.begin(), half_widths.end());
  std::sort(sorted.begin(), sorted.end());
  report.norm_trace = norm_sweep(spec, sorted, relative_tol);
  return report;
}

}  // namespace wshift
