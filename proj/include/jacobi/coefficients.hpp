#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/dense_matrix.hpp"
#include "jacobi/scaled_value.hpp"

namespace jacobi {

/// A real function on the path I = {0, ..., n+1}.
class GridFunction {
 public:
  /// Throws NonFiniteInput on inf/nan and LengthMismatch when fewer than two
  /// values are given.
  explicit GridFunction(std::vector<double> values);

  /// The zero function on the path of size n.
  static GridFunction zeros(std::size_t n);
  /// Wraps a computed result; non-finite values raise Overflow rather than
  /// NonFiniteInput since they come from the arithmetic, not the caller.
  static GridFunction computed(std::vector<double> values);

  /// Path parameter n; the function has n+2 values.
  std::size_t n() const noexcept { return values_.size() - 2; }
  std::size_t size() const noexcept { return values_.size(); }

  double operator[](std::size_t k) const noexcept { return values_[k]; }
  double at(std::size_t k) const;
  std::span<const double> values() const noexcept { return values_; }

  double max_abs() const noexcept;

  bool operator==(const GridFunction&) const = default;

 private:
  struct Unchecked {};
  GridFunction(Unchecked, std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// Coefficients a, b, c of the Jacobi matrix
///
///   [  b(0) -a(0)                       ]
///   [ -c(0)  b(1) -a(1)                 ]
///   [         ...   ...   ...           ]
///   [              -c(n)  b(n+1)        ]
///
/// on the path {0, ..., n+1}. a(n+1) = c(n) and c(n+1) = a(n) are filled in
/// at construction; they never appear in the matrix.
class JacobiCoefficients {
 public:
  /// a and c carry n+1 values, b carries n+2. Throws LengthMismatch,
  /// NonFiniteInput or ZeroOffDiagonal.
  JacobiCoefficients(std::size_t n, std::vector<double> a, std::vector<double> b,
                     std::vector<double> c);

  std::size_t n() const noexcept { return n_; }
  /// Matrix order n+2.
  std::size_t size() const noexcept { return n_ + 2; }

  double a(std::size_t k) const noexcept { return a_[k]; }
  double b(std::size_t k) const noexcept { return b_[k]; }
  double c(std::size_t k) const noexcept { return c_[k]; }

  /// Full sequences indexed 0..n+1.
  std::span<const double> a() const noexcept { return a_; }
  std::span<const double> b() const noexcept { return b_; }
  std::span<const double> c() const noexcept { return c_; }

  bool operator==(const JacobiCoefficients&) const = default;

 private:
  std::size_t n_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

DenseMatrix to_dense(const JacobiCoefficients& j);

/// q(0) = b(0)-a(0), q(k) = b(k)-a(k)-c(k-1), q(n+1) = b(n+1)-c(n).
/// Largest |entry| of to_dense(j).
double max_abs_coefficient(const JacobiCoefficients& j) noexcept;

GridFunction potential(const JacobiCoefficients& j);

/// rho(k) = prod_{s<k} a(s)/c(s); rho(0) = 1.
ScaledValue companion_rho(const JacobiCoefficients& j, std::size_t k);

/// Indicator of node s on the path of size n.
GridFunction dirac(std::size_t s, std::size_t n);

}  // namespace jacobi
