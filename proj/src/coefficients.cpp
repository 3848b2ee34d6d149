#include "jacobi/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

void require_finite(std::span<const double> values, const char* name) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw NonFiniteInput(std::string(name) + "(" + std::to_string(k) + ") is not finite");
    }
  }
}

}  // namespace

GridFunction::GridFunction(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw LengthMismatch("grid function needs at least two values");
  require_finite(values_, "u");
}

GridFunction GridFunction::zeros(std::size_t n) {
  return GridFunction(Unchecked{}, std::vector<double>(n + 2, 0.0));
}

GridFunction GridFunction::computed(std::vector<double> values) {
  if (values.size() < 2) throw LengthMismatch("grid function needs at least two values");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw Overflow("computed grid function is not finite at node " + std::to_string(k));
    }
  }
  return GridFunction(Unchecked{}, std::move(values));
}

double GridFunction::at(std::size_t k) const {
  if (k >= values_.size()) throw IndexOutOfRange("grid index " + std::to_string(k));
  return values_[k];
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

JacobiCoefficients::JacobiCoefficients(std::size_t n, std::vector<double> a, std::vector<double> b,
                                       std::vector<double> c)
    : n_(n), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != n + 1 || c_.size() != n + 1 || b_.size() != n + 2) {
    throw LengthMismatch("expected |a| = |c| = " + std::to_string(n + 1) + " and |b| = " +
                         std::to_string(n + 2) + ", got " + std::to_string(a_.size()) + ", " +
                         std::to_string(b_.size()) + ", " + std::to_string(c_.size()));
  }
  require_finite(a_, "a");
  require_finite(b_, "b");
  require_finite(c_, "c");
  for (std::size_t k = 0; k <= n; ++k) {
    if (a_[k] == 0.0 || c_[k] == 0.0) throw ZeroOffDiagonal(k);
  }
  a_.push_back(c_[n]);
  c_.push_back(a_[n]);
}

DenseMatrix to_dense(const JacobiCoefficients& j) {
  const std::size_t m = j.size();
  DenseMatrix d(m);
  for (std::size_t k = 0; k < m; ++k) {
    d(k, k) = j.b(k);
    if (k + 1 < m) {
      d(k, k + 1) = -j.a(k);
      d(k + 1, k) = -j.c(k);
    }
  }
  return d;
}

double max_abs_coefficient(const JacobiCoefficients& j) noexcept {
  double m = 0.0;
  for (std::size_t k = 0; k <= j.n() + 1; ++k) m = std::max(m, std::fabs(j.b(k)));
  for (std::size_t k = 0; k <= j.n(); ++k) m = std::max({m, std::fabs(j.a(k)), std::fabs(j.c(k))});
  return m;
}

GridFunction potential(const JacobiCoefficients& j) {
  const std::size_t n = j.n();
  std::vector<double> q(n + 2);
  q[0] = j.b(0) - j.a(0);
  for (std::size_t k = 1; k <= n; ++k) q[k] = j.b(k) - j.a(k) - j.c(k - 1);
  q[n + 1] = j.b(n + 1) - j.c(n);
  return GridFunction::computed(std::move(q));
}

ScaledValue companion_rho(const JacobiCoefficients& j, std::size_t k) {
  if (k > j.n() + 1) throw IndexOutOfRange("companion_rho: k = " + std::to_string(k));
  ScaledValue rho = ScaledValue::one();
  for (std::size_t s = 0; s < k; ++s) {
    rho *= ScaledValue(j.a(s));
    rho /= ScaledValue(j.c(s));
  }
  return rho;
}

GridFunction dirac(std::size_t s, std::size_t n) {
  if (s > n + 1) throw IndexOutOfRange("dirac: s = " + std::to_string(s));
  std::vector<double> e(n + 2, 0.0);
  e[s] = 1.0;
  return GridFunction(std::move(e));
}

}  // namespace jacobi
