#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace jacobi {

/// Square row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t order() const noexcept { return order_; }

  double& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * order_ + col]; }
  double operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * order_ + col]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * order_, order_}; }
  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * order_, order_}; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

}  // namespace jacobi
