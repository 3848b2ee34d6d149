#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jacobi/scaled_value.hpp"

/// Chebyshev functions P_k(x, y) over coefficient sequences, and the
/// second-kind Chebyshev polynomials U_k they generalize.
namespace jacobi::chebyshev {

/// alpha in {0,1}^p together with its support i_1 < ... < i_m (1-based).
struct BinaryMultiIndex {
  std::vector<std::uint8_t> bits;
  std::vector<int> support;

  int order() const noexcept { return static_cast<int>(bits.size()); }
  int weight() const noexcept { return static_cast<int>(support.size()); }
  /// Complement index: zero at i_j and i_j + 1 for every support position,
  /// one elsewhere.
  std::vector<std::uint8_t> complement() const;

  bool operator==(const BinaryMultiIndex&) const = default;
};

/// The set l_p^m: weight m, alpha_p = 0 when m >= 1, support gaps >= 2.
/// Ordered lexicographically by support. Throws InvalidArity if m > p/2.
std::vector<BinaryMultiIndex> enumerate_multi_indices(int p, int m);

/// A pair of sequences read at shifted positions: x(j) is x[j + offset].
class ChebSequences {
 public:
  ChebSequences(std::span<const double> x, std::span<const double> y, int offset = 0) noexcept
      : x_(x), y_(y), offset_(offset) {}

  /// Throws IndexOutOfRange when j + offset leaves the underlying storage.
  double x(int j) const;
  double y(int j) const;
  int offset() const noexcept { return offset_; }
  ChebSequences shifted(int m) const noexcept { return {x_, y_, offset_ + m}; }

 private:
  std::span<const double> x_;
  std::span<const double> y_;
  int offset_;
};

struct DirectSum {
  double value = 0.0;
  /// Sum of |x^complement * y^alpha| over all terms; the natural magnitude
  /// against which cancellation in value is measured.
  double magnitude = 0.0;
};

/// P_k by explicit summation over the multi-index sets. Exponential in k;
/// meant as a reference.
double cheb_direct(int k, const ChebSequences& s);
DirectSum cheb_direct_terms(int k, const ChebSequences& s);

/// P_k via P_k = x(k) P_{k-1} - y(k-1) P_{k-2}.
ScaledValue cheb_recurrence(int k, const ChebSequences& s);

/// P_{-1}, ..., P_{k_max}: at(k) for k >= -1.
class ChebTable {
 public:
  explicit ChebTable(std::vector<ScaledValue> values) : values_(std::move(values)) {}
  const ScaledValue& at(int k) const { return values_.at(static_cast<std::size_t>(k + 1)); }
  int k_max() const noexcept { return static_cast<int>(values_.size()) - 2; }

 private:
  std::vector<ScaledValue> values_;
};

ChebTable cheb_prefix_table(int k_max, const ChebSequences& s);

/// T(k) = P_{last-k}(x_k, y_k) for k = 0..last+1, i.e. the Chebyshev function
/// of the shifted sequences reading positions k+1..last. Computed in one
/// backward sweep T(k) = x(k+1) T(k+1) - y(k+1) T(k+2), T(last) = 1,
/// T(last+1) = 0.
std::vector<ScaledValue> cheb_tail_table(int last, const ChebSequences& s);

/// U_k(t) by its three-term recurrence; U_{-1} = 0, U_0 = 1.
double cheb_u(int k, double t);
/// U_0(t), ..., U_{k_max}(t) without overflow.
std::vector<ScaledValue> cheb_u_table(int k_max, double t);

/// cos(j pi / (k+1)) for j = 1..k, decreasing.
std::vector<double> cheb_u_zeros(int k);

}  // namespace jacobi::chebyshev
