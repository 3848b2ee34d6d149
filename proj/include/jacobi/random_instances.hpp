#pragma once

#include <cstddef>
#include <cstdint>

#include "jacobi/coefficients.hpp"

namespace jacobi {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// uniform() advances once and returns (state >> 11) * 2^-53 in [0, 1).
/// Fixed here so any implementation can reproduce an instance stream.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

struct InstanceRanges {
  double offdiag_min = 0.5;
  double offdiag_max = 2.0;
  /// When true each off-diagonal draws a magnitude, then a sign (u < 0.5 is
  /// negative); otherwise off-diagonals are positive and only one draw is used.
  bool signed_offdiag = true;
  double diag_min = -4.0;
  double diag_max = 4.0;
};

/// Draws a(0..n), then c(0..n), then b(0..n+1) for a matrix of the given
/// order (n = order - 2, order >= 2).
JacobiCoefficients random_jacobi(Lcg64& rng, std::size_t order, const InstanceRanges& ranges = {});

}  // namespace jacobi
