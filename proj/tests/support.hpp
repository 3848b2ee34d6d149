#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "jacobi/coefficients.hpp"
#include "jacobi/jacobi_inverse.hpp"
#include "jacobi/random_instances.hpp"

namespace jacobi::testing {

inline JacobiCoefficients tridiag(std::size_t order, double sub, double diag, double super) {
  const std::size_t n = order - 2;
  return JacobiCoefficients(n, std::vector<double>(n + 1, -super), std::vector<double>(n + 2, diag),
                            std::vector<double>(n + 1, -sub));
}

/// tridiag(-1, 2, -1) of the given order.
inline JacobiCoefficients laplacian(std::size_t order) { return tridiag(order, -1.0, 2.0, -1.0); }

inline double relative_error(double got, double want) {
  const double scale = std::max(std::fabs(got), std::fabs(want));
  return scale == 0.0 ? 0.0 : std::fabs(got - want) / scale;
}

/// Random instance whose determinant is not close to cancelling:
/// |D_J| > 1e-6 * scale.
inline JacobiCoefficients random_regular(Lcg64& rng, std::size_t order,
                                         const InstanceRanges& ranges = {}) {
  for (;;) {
    JacobiCoefficients j = random_jacobi(rng, order, ranges);
    const FundamentalSeqJ fs = fundamental_seq_j(j);
    if (!fs.scale.is_zero() && magnitude_less(ScaledValue(1e-6) * fs.scale, fs.d_j)) return j;
  }
}

inline GridFunction random_grid(Lcg64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n + 2);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return GridFunction(std::move(v));
}

}  // namespace jacobi::testing
