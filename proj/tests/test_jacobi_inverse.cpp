#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "jacobi/chebyshev.hpp"
#include "jacobi/jacobi_inverse.hpp"
#include "jacobi/oracle.hpp"
#include "jacobi/sturm_liouville.hpp"
#include "support.hpp"

using namespace jacobi;
using V = std::vector<double>;

namespace {

const JacobiCoefficients kLap3(1, {1, 1}, {2, 2, 2}, {1, 1});
const JacobiCoefficients kTwo(0, {2}, {5, 4}, {3});
const JacobiCoefficients kZeroDiag(1, {1, 1}, {0, 0, 0}, {1, 1});

V doubles(const std::vector<ScaledValue>& xs) {
  V out;
  for (const auto& x : xs) out.push_back(x.to_double());
  return out;
}

// max |A - B| / max |B|
double matrix_relative(const DenseMatrix& a, const DenseMatrix& b) {
  return oracle::max_abs_difference(a, b) / oracle::max_abs_entry(b);
}

void check_matrix(const DenseMatrix& got, const V& want, double scale, double tol) {
  const std::size_t m = got.order();
  REQUIRE(want.size() == m * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t s = 0; s < m; ++s) {
      CHECK(std::fabs(got(k, s) - want[k * m + s] * scale) <= tol);
    }
  }
}

JacobiCoefficients scaled(const JacobiCoefficients& j, double factor) {
  auto mul = [&](std::span<const double> xs, std::size_t len) {
    V out(xs.begin(), xs.begin() + len);
    for (auto& x : out) x *= factor;
    return out;
  };
  const std::size_t n = j.n();
  return JacobiCoefficients(n, mul(j.a(), n + 1), mul(j.b(), n + 2), mul(j.c(), n + 1));
}

}  // namespace

TEST_CASE("fundamental sequences examples") {
  const FundamentalSeqJ fs = fundamental_seq_j(kLap3);
  CHECK(doubles(fs.phi) == V{1, 2, 3});
  CHECK(doubles(fs.psi) == V{3, 2, 1});
  CHECK(fs.d_j.to_double() == 4.0);
  CHECK(fs.d_j_from_phi.to_double() == 4.0);

  const FundamentalSeqJ two = fundamental_seq_j(kTwo);
  CHECK(doubles(two.phi) == V{1, 5});
  CHECK(doubles(two.psi) == V{4, 1});
  CHECK(two.d_j.to_double() == 14.0);
  CHECK(two.d_j_from_phi.to_double() == 14.0);
}

TEST_CASE("fundamental sequences are leading and trailing minors") {
  Lcg64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const JacobiCoefficients j = random_jacobi(rng, 2 + trial % 12);
    const FundamentalSeqJ fs = fundamental_seq_j(j);
    const DenseMatrix d = to_dense(j);
    const std::size_t m = j.size();
    for (std::size_t k = 1; k < m; ++k) {
      // Leading minor of order k and trailing minor on rows k..m-1.
      DenseMatrix lead(k), trail(m - k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) lead(r, s) = d(r, s);
      for (std::size_t r = k; r < m; ++r)
        for (std::size_t s = k; s < m; ++s) trail(r - k, s - k) = d(r, s);
      CHECK(std::fabs(fs.phi[k].to_double() - oracle::dense_det(lead)) <=
            1e-11 * std::pow(6.0, static_cast<double>(k)));
      CHECK(std::fabs(fs.psi[k - 1].to_double() - oracle::dense_det(trail)) <=
            1e-11 * std::pow(6.0, static_cast<double>(m - k)));
    }
    CHECK(fs.phi[0].to_double() == 1.0);
    CHECK(fs.psi[m - 1].to_double() == 1.0);
    // Both determinant formulas agree.
    CHECK(std::fabs((fs.d_j - fs.d_j_from_phi).to_double()) <= 1e-10 * fs.scale.to_double());
  }
}

TEST_CASE("scaling relation to the Sturm-Liouville fundamental solutions") {
  Lcg64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const JacobiCoefficients j = random_jacobi(rng, 2 + trial % 20);
    const std::size_t n = j.n();
    const FundamentalSeqJ fs = fundamental_seq_j(j);
    const GridFunction phi = sturm_liouville::fundamental_phi(j);
    const GridFunction psi = sturm_liouville::fundamental_psi(j);
    ScaledValue pa = ScaledValue::one();
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const double want = (ScaledValue(j.a(0)) * fs.phi[k] / pa).to_double();
      CHECK(std::fabs(phi[k] - want) <= 1e-10 * std::max(phi.max_abs(), 1.0));
      pa *= ScaledValue(j.a(k));
    }
    ScaledValue pc = ScaledValue::one();
    for (std::size_t k = n + 1; k-- > 0;) {
      pc *= ScaledValue(j.c(k));
      const double want = (ScaledValue(j.c(n)) * fs.psi[k] / pc).to_double();
      CHECK(std::fabs(psi[k] - want) <= 1e-10 * std::max(psi.max_abs(), 1.0));
    }
    CHECK(fs.psi[n + 1].to_double() == 1.0);
  }
}

TEST_CASE("invert examples") {
  const InverseResult r = invert(kLap3);
  check_matrix(r.entries, {3, 2, 1, 2, 4, 2, 1, 2, 3}, 0.25, 1e-15);
  CHECK(r.det_matrix == 4.0);
  CHECK(r.det_inverse == 0.25);
  CHECK(r.report.regular);

  const InverseResult t = invert(kTwo);
  check_matrix(t.entries, {4, 2, 3, 5}, 1.0 / 14.0, 1e-16);
  CHECK(t.entries(1, 0) == doctest::Approx(3.0 / 14.0).epsilon(1e-15));
  CHECK(t.det_matrix == 14.0);

  try {
    invert(kZeroDiag);
    FAIL("expected SingularMatrix");
  } catch (const SingularMatrix& e) {
    CHECK_FALSE(e.report().regular);
    CHECK(e.report().denom == 0.0);
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(kLap3).to_double() == 4.0);
  CHECK(determinant(testing::laplacian(4)).to_double() == 5.0);
  CHECK(determinant(kTwo).to_double() == 14.0);
  CHECK(determinant(kZeroDiag).is_zero());
  for (std::size_t m = 2; m <= 40; ++m) {
    CHECK(determinant(testing::laplacian(m)).to_double() == static_cast<double>(m + 1));
  }
}

TEST_CASE("inverse residual and determinant on random regular instances") {
  Lcg64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + trial % 63;
    const JacobiCoefficients j = testing::random_regular(rng, m);
    const InverseResult r = invert(j);
    const DenseMatrix d = to_dense(j);
    CHECK(oracle::residual_inf_norm(d, r.entries) <= 1e-8);
    CHECK(oracle::residual_inf_norm(r.entries, d) <= 1e-8);
    CHECK(std::fabs(r.det_inverse * r.det_matrix - 1.0) <= 1e-9);
    if (m <= 16) {
      CHECK(testing::relative_error(r.det_matrix, oracle::dense_det(d)) <= 1e-8);
    }
  }
}

TEST_CASE("inverse matches the resolvent kernel") {
  Lcg64 rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const JacobiCoefficients j = testing::random_regular(rng, 2 + trial % 33);
    const InverseResult r = invert(j);
    const sturm_liouville::KernelMatrix k = sturm_liouville::resolvent_kernel(j);
    CHECK(matrix_relative(r.entries, k.entries) <= 1e-9);
  }
}

TEST_CASE("inverse is a Green matrix") {
  Lcg64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const JacobiCoefficients j = testing::random_regular(rng, 2 + trial % 30);
    const InverseResult r = invert(j);
    CHECK_NOTHROW(oracle::green_matrix_check(r.entries, 1e-8));
  }
}

TEST_CASE("serial and parallel assembly are bit-identical") {
  Lcg64 rng(56);
  for (std::size_t m : {2u, 3u, 17u, 64u, 300u}) {
    const JacobiCoefficients j = testing::random_regular(rng, m);
    const InverseResult a = invert(j, kDefaultTolerance, Assembly::serial);
    const InverseResult b = invert(j, kDefaultTolerance, Assembly::parallel);
    CHECK(std::memcmp(a.entries.data().data(), b.entries.data().data(), m * m * sizeof(double)) == 0);
  }
}

TEST_CASE("scaling by 10^{+-100} scales the inverse inversely") {
  Lcg64 rng(57);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + (trial * 7) % 63;
    const JacobiCoefficients j = testing::random_regular(rng, m);
    const InverseResult base = invert(j);
    for (double e : {100.0, -100.0}) {
      const InverseResult r = invert(scaled(j, std::pow(10.0, e)));
      double err = 0.0;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t s = 0; s < m; ++s)
          err = std::max(err, std::fabs(r.entries(k, s) * std::pow(10.0, e) - base.entries(k, s)));
      CHECK(err <= 1e-12 * oracle::max_abs_entry(base.entries));
      CHECK(r.determinant.log2_magnitude() ==
            doctest::Approx(base.determinant.log2_magnitude() + e * m * std::log2(10.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("large sizes stay finite through ScaledValue") {
  // Diagonal dominance makes minors grow like 3^k, far past the double range.
  const JacobiCoefficients j = testing::tridiag(1000, -1.0, 4.0, -1.0);
  const ScaledValue d = determinant(j);
  CHECK(d.log2_magnitude() > 1024);
  const InverseResult r = invert(j);
  CHECK(std::isinf(r.det_matrix));
  CHECK(r.det_inverse == 0.0);
  CHECK(r.entries(500, 500) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
}

TEST_CASE("solve uses the semiseparable structure") {
  const GridFunction u = solve(kLap3, dirac(1, 1));
  CHECK(u[0] == 0.5);
  CHECK(u[1] == 1.0);
  CHECK(u[2] == 0.5);
  CHECK_THROWS_AS(solve(kZeroDiag, GridFunction::zeros(1)), SingularMatrix);
  Lcg64 rng(58);
  for (int trial = 0; trial < 100; ++trial) {
    const JacobiCoefficients j = testing::random_regular(rng, 2 + trial % 60);
    const GridFunction f = testing::random_grid(rng, j.n());
    const GridFunction x = solve(j, f);
    const DenseMatrix d = to_dense(j);
    double res = 0.0;
    for (std::size_t k = 0; k < j.size(); ++k) {
      double acc = -f[k];
      for (std::size_t s = 0; s < j.size(); ++s) acc += d(k, s) * x[s];
      res = std::max(res, std::fabs(acc));
    }
    CHECK(res <= 1e-8 * (1.0 + f.max_abs()));
  }
}

TEST_CASE("constant interior closed form") {
  const ConstantInteriorSpec lap{1, 2, 2, 1, 1, 2, 1, 3};
  const InverseResult r = invert_constant_interior(lap);
  CHECK(oracle::max_abs_difference(r.entries, invert(kLap3).entries) <= 1e-12);
  CHECK(r.det_matrix == doctest::Approx(4.0).epsilon(1e-14));

  const ConstantInteriorSpec sing{1, 0, 0, 1, 1, 0, 1, 3};
  CHECK_THROWS_AS(invert_constant_interior(sing), SingularMatrix);

  Lcg64 rng(59);
  int tested = 0;
  while (tested < 200) {
    ConstantInteriorSpec spec;
    spec.size = 3 + tested % 8;
    spec.alpha = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    spec.gamma = rng.uniform(0.5, 2.0) * (tested % 5 == 4 ? -1 : 1) * (spec.alpha < 0 ? -1 : 1);
    spec.beta = rng.uniform(-4, 4);
    spec.a0 = rng.uniform(0.5, 2.0);
    spec.cn = -rng.uniform(0.5, 2.0);
    spec.b0 = rng.uniform(-4, 4);
    spec.bn1 = rng.uniform(-4, 4);
    const JacobiCoefficients j = spec.to_coefficients();
    const FundamentalSeqJ fs = fundamental_seq_j(j);
    if (!magnitude_less(ScaledValue(1e-6) * fs.scale, fs.d_j)) continue;
    ++tested;
    const InverseResult closed = invert_constant_interior(spec);
    const DenseMatrix dense = oracle::dense_invert(to_dense(j));
    CHECK(oracle::max_abs_difference(closed.entries, dense) <= 1e-9 * std::max(1.0, oracle::max_abs_entry(dense)));
    CHECK(matrix_relative(closed.entries, invert(j).entries) <= 1e-10);
    CHECK(testing::relative_error(closed.det_matrix, fs.d_j.to_double()) <= 1e-10);
  }
}

TEST_CASE("Toeplitz closed form") {
  const InverseResult r = invert_toeplitz({1, 2, 1, 3});
  check_matrix(r.entries, {3, 2, 1, 2, 4, 2, 1, 2, 3}, 0.25, 1e-15);
  CHECK(r.entries(0, 1) == 0.5);
  CHECK(r.det_inverse == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(invert_toeplitz({1, 0, 1, 3}), SingularMatrix);

  const ToeplitzSpec spec{2, 3, 0.5, 6};
  CHECK(*spec.q_param() == doctest::Approx(1.5));
  CHECK(matrix_relative(invert_toeplitz(spec).entries, invert(spec.to_coefficients()).entries) <= 1e-10);

  CHECK_FALSE(ToeplitzSpec{1, 2, -1, 4}.q_param().has_value());
  CHECK_THROWS_AS(ToeplitzSpec({0, 2, 1, 4}).validate(), ZeroOffDiagonal);
  CHECK_THROWS_AS(ToeplitzSpec({1, 2, 1, 1}).validate(), LengthMismatch);
}

TEST_CASE("Toeplitz singular grid is detected") {
  for (std::size_t m = 3; m <= 12; ++m) {
    const double n3 = static_cast<double>(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
      const double beta = 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / n3);
      CHECK_THROWS_AS(invert_toeplitz({1, beta, 1, m}), SingularMatrix);
      CHECK_NOTHROW(invert_toeplitz({1, beta + 1e-3, 1, m}));
      CHECK_NOTHROW(invert_toeplitz({1, beta - 1e-3, 1, m}));
    }
  }
}

TEST_CASE("Toeplitz closed form agrees with the general path") {
  Lcg64 rng(60);
  for (int trial = 0; trial < 200; ++trial) {
    ToeplitzSpec spec;
    spec.size = 2 + trial % 40;
    spec.alpha = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    spec.gamma = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    spec.beta = rng.uniform(-4, 4);
    const JacobiCoefficients j = spec.to_coefficients();
    const FundamentalSeqJ fs = fundamental_seq_j(j);
    if (!magnitude_less(ScaledValue(1e-6) * fs.scale, fs.d_j)) continue;
    const InverseResult closed = invert_toeplitz(spec);
    CHECK(matrix_relative(closed.entries, invert(j).entries) <= 1e-10);
    CHECK(testing::relative_error(closed.det_matrix, fs.d_j.to_double()) <= 1e-10);
  }
}

TEST_CASE("symmetric Toeplitz closed form") {
  for (std::size_t m = 2; m <= 10; ++m) {
    const InverseResult r = invert_sym_toeplitz(1, 2, m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t s = 0; s < m; ++s) {
        const double want = static_cast<double>((std::min(k, s) + 1) * (m - std::max(k, s))) / (m + 1);
        CHECK(std::fabs(r.entries(k, s) - want) <= 1e-10);
        CHECK(r.entries(k, s) == r.entries(s, k));
      }
    }
    CHECK(r.det_matrix == doctest::Approx(static_cast<double>(m + 1)).epsilon(1e-14));
  }
  const InverseResult r3 = invert_sym_toeplitz(1, 2, 3);
  CHECK(r3.entries(0, 0) == 0.75);
  CHECK(r3.entries(1, 1) == 1.0);
  // beta = 2cos(pi/4) is a zero of U_3, so size 3 (n+3 = 4) is singular.
  CHECK_THROWS_AS(invert_sym_toeplitz(1, 2 * std::cos(std::numbers::pi / 4), 3), SingularMatrix);

  Lcg64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    const double beta = rng.uniform(-4, 4);
    const std::size_t m = 2 + trial % 30;
    const ToeplitzSpec spec{alpha, beta, alpha, m};
    const FundamentalSeqJ fs = fundamental_seq_j(spec.to_coefficients());
    if (!magnitude_less(ScaledValue(1e-6) * fs.scale, fs.d_j)) continue;
    const InverseResult sym = invert_sym_toeplitz(alpha, beta, m);
    CHECK(matrix_relative(sym.entries, invert_toeplitz(spec).entries) <= 1e-10);
    CHECK(matrix_relative(sym.entries, invert(spec.to_coefficients()).entries) <= 1e-10);
  }
}
