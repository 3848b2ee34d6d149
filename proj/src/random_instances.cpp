#include "jacobi/random_instances.hpp"

#include <vector>

#include "jacobi/errors.hpp"

namespace jacobi {

JacobiCoefficients random_jacobi(Lcg64& rng, std::size_t order, const InstanceRanges& ranges) {
  if (order < 2) throw LengthMismatch("random_jacobi: order must be >= 2");
  const std::size_t n = order - 2;
  const auto offdiag = [&] {
    const double magnitude = rng.uniform(ranges.offdiag_min, ranges.offdiag_max);
    if (!ranges.signed_offdiag) return magnitude;
    return rng.uniform() < 0.5 ? -magnitude : magnitude;
  };
  std::vector<double> a(n + 1), b(n + 2), c(n + 1);
  for (auto& v : a) v = offdiag();
  for (auto& v : c) v = offdiag();
  for (auto& v : b) v = rng.uniform(ranges.diag_min, ranges.diag_max);
  return JacobiCoefficients(n, std::move(a), std::move(b), std::move(c));
}

}  // namespace jacobi
