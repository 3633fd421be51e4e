#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wshift {

using Index = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (rational strings, spec files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at an integer where its denominator vanishes.
class PoleOnRay : public Error {
 public:
  explicit PoleOnRay(Index index)
      : Error("denominator vanishes at n = " + std::to_string(index)), index_(index) {}
  Index index() const noexcept { return index_; }

 private:
  Index index_;
};

/// d_n < 0: the self-commutator is not positive at this index.
class NotHyponormalAtIndex : public Error {
 public:
  explicit NotHyponormalAtIndex(Index index)
      : Error("spec not hyponormal at index " + std::to_string(index)), index_(index) {}
  Index index() const noexcept { return index_; }

 private:
  Index index_;
};

/// A matrix handed to a PSD-only routine has a negative diagonal entry or eigenvalue.
class NotPSD : public Error {
 public:
  NotPSD(std::size_t row, double value)
      : Error("matrix not positive semidefinite at row " + std::to_string(row)),
        row_(row), value_(value) {}
  std::size_t row() const noexcept { return row_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t row_;
  double value_;
};

}  // namespace wshift
