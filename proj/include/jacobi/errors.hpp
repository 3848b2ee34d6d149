#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a(k) or c(k) is exactly zero; the matrix would be reducible.
class ZeroOffDiagonal : public Error {
 public:
  explicit ZeroOffDiagonal(std::size_t index)
      : Error("zero off-diagonal coefficient at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArity : public Error {
 public:
  using Error::Error;
};

/// A value left the binary64 range where a plain real was required.
class Overflow : public Error {
 public:
  using Error::Error;
};

class SingularProblem : public Error {
 public:
  using Error::Error;
};

class NumericallySingular : public Error {
 public:
  using Error::Error;
};

/// R does not factor as h_j v_min(i,j) w_max(i,j). Positions are 1-based;
/// row == col == 0 flags a failure of the determinant product formula.
class NotGreenStructured : public Error {
 public:
  NotGreenStructured(std::size_t row, std::size_t col, const std::string& what)
      : Error(what), row_(row), col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace jacobi
