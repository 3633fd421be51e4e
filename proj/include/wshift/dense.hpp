#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wshift {

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

  /// Square block [first, first + size) x [first, first + size).
  Matrix block(std::size_t first, std::size_t size) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// OpenMP kernels. Products skip zero multiplicands, so banded operands cost
// O(n^2) rather than O(n^3); the result is still formed densely.
/// Column range [lo, hi) outside which a row is zero.
struct RowSpan {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

namespace kernels {

std::vector<RowSpan> row_spans(const Matrix& a);
/// matvec restricted to the precomputed nonzero span of each row.
std::vector<double> matvec_banded(const Matrix& a, std::span<const RowSpan> spans,
                                  std::span<const double> x);

Matrix multiply(const Matrix& a, const Matrix& b);
/// a^T b
Matrix multiply_transpose_left(const Matrix& a, const Matrix& b);
/// a b^T
Matrix multiply_transpose_right(const Matrix& a, const Matrix& b);
/// a^T a - a a^T
Matrix self_commutator(const Matrix& a);
std::vector<double> matvec(const Matrix& a, std::span<const double> x);
double max_abs_offdiagonal(const Matrix& a);

}  // namespace kernels

// Straightforward single-threaded reference versions, kept for testing and
// benchmarking the kernels above.
namespace kernels::serial {

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_transpose_left(const Matrix& a, const Matrix& b);
Matrix multiply_transpose_right(const Matrix& a, const Matrix& b);
Matrix self_commutator(const Matrix& a);
std::vector<double> matvec(const Matrix& a, std::span<const double> x);
double max_abs_offdiagonal(const Matrix& a);

}  // namespace kernels::serial

}  // namespace wshift
