#include "wshift/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wshift {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::block(std::size_t first, std::size_t size) const {
  if (first + size > rows_ || first + size > cols_) throw std::out_of_range("Matrix::block");
  Matrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((first + i) * cols_ + first), size,
                out.row(i).begin());
  }
  return out;
}

namespace kernels {

namespace {

void check_inner(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_inner(a.cols(), b.rows());
  Matrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto out = c.row(i);
    const auto arow = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix multiply_transpose_left(const Matrix& a, const Matrix& b) {
  check_inner(a.rows(), b.rows());
  Matrix c(a.cols(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.cols());
  // Row i of a^T b accumulates a(k, i) * b.row(k); each thread owns its rows.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.rows(); ++k) {
      const double aki = a(k, i);
      if (aki == 0.0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aki * brow[j];
    }
  }
  return c;
}

Matrix multiply_transpose_right(const Matrix& a, const Matrix& b) {
  check_inner(a.cols(), b.cols());
  Matrix c(a.rows(), b.rows());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto arow = a.row(i);
    std::size_t lo = 0;
    std::size_t hi = arow.size();
    while (lo < hi && arow[lo] == 0.0) ++lo;
    while (hi > lo && arow[hi - 1] == 0.0) --hi;
    if (lo == hi) continue;
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const auto brow = b.row(j);
      double sum = 0.0;
      for (std::size_t k = lo; k < hi; ++k) sum += arow[k] * brow[k];
      c(i, j) = sum;
    }
  }
  return c;
}

Matrix self_commutator(const Matrix& a) {
  Matrix left = multiply_transpose_left(a, a);
  const Matrix right = multiply_transpose_right(a, a);
  const auto n = static_cast<std::ptrdiff_t>(left.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto out = left.row(i);
    const auto sub = right.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= sub[j];
  }
  return left;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  check_inner(a.cols(), x.size());
  std::vector<double> y(a.rows(), 0.0);
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto arow = a.row(i);
    double sum = 0.0;
    for (std::size_t j = 0; j < arow.size(); ++j) sum += arow[j] * x[j];
    y[i] = sum;
  }
  return y;
}

std::vector<RowSpan> row_spans(const Matrix& a) {
  std::vector<RowSpan> spans(a.rows());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto arow = a.row(i);
    std::size_t lo = 0;
    std::size_t hi = arow.size();
    while (lo < hi && arow[lo] == 0.0) ++lo;
    while (hi > lo && arow[hi - 1] == 0.0) --hi;
    spans[i] = {lo, hi};
  }
  return spans;
}

std::vector<double> matvec_banded(const Matrix& a, std::span<const RowSpan> spans,
                                  std::span<const double> x) {
  check_inner(a.cols(), x.size());
  check_inner(a.rows(), spans.size());
  std::vector<double> y(a.rows(), 0.0);
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto arow = a.row(i);
    double sum = 0.0;
    for (std::size_t j = spans[i].lo; j < spans[i].hi; ++j) sum += arow[j] * x[j];
    y[i] = sum;
  }
  return y;
}

double max_abs_offdiagonal(const Matrix& a) {
  double worst = 0.0;
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto arow = a.row(i);
    for (std::size_t j = 0; j < arow.size(); ++j) {
      if (j != i) worst = std::max(worst, std::abs(arow[j]));
    }
  }
  return worst;
}

}  // namespace kernels

}  // namespace wshift
