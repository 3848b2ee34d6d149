// Serial vs OpenMP row assembly of the explicit inverse, against the dense
// O(m^3) oracle. Prints one row per size; "--quick" runs small sizes only.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "jacobi/jacobi_inverse.hpp"
#include "jacobi/oracle.hpp"
#include "jacobi/random_instances.hpp"

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const std::vector<std::size_t> sizes =
      quick ? std::vector<std::size_t>{16, 64} : std::vector<std::size_t>{64, 256, 512, 1024, 2048};
  const std::size_t oracle_limit = 1024;

  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%6s %12s %12s %12s %12s %9s %10s\n", "size", "fundamental", "serial_ms", "omp_ms",
              "oracle_ms", "speedup", "identical");

  jacobi::Lcg64 rng(20240);
  int status = 0;
  for (std::size_t m : sizes) {
    jacobi::JacobiCoefficients j = jacobi::random_jacobi(rng, m);
    while (!jacobi::regularity_report(j, jacobi::fundamental_seq_j(j)).regular) {
      j = jacobi::random_jacobi(rng, m);
    }
    const int reps = m <= 256 ? 20 : 5;

    const double fund = best_ms(reps, [&] { (void)jacobi::fundamental_seq_j(j); });
    jacobi::InverseResult serial, parallel;
    const double t_serial = best_ms(reps, [&] {
      serial = jacobi::invert(j, jacobi::kDefaultTolerance, jacobi::Assembly::serial);
    });
    const double t_omp = best_ms(reps, [&] {
      parallel = jacobi::invert(j, jacobi::kDefaultTolerance, jacobi::Assembly::parallel);
    });
    const bool same = std::memcmp(serial.entries.data().data(), parallel.entries.data().data(),
                                  m * m * sizeof(double)) == 0;
    status |= !same;

    if (m <= oracle_limit) {
      const jacobi::DenseMatrix dense = jacobi::to_dense(j);
      const double t_oracle =
          best_ms(m <= 256 ? 5 : 1, [&] { (void)jacobi::oracle::dense_invert(dense); });
      std::printf("%6zu %12.4f %12.4f %12.4f %12.4f %8.1fx %10s\n", m, fund, t_serial, t_omp,
                  t_oracle, t_oracle / t_serial, same ? "yes" : "NO");
    } else {
      std::printf("%6zu %12.4f %12.4f %12.4f %12s %9s %10s\n", m, fund, t_serial, t_omp, "-", "-",
                  same ? "yes" : "NO");
    }
  }
  return status;
}
