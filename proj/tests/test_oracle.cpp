#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>

#include "jacobi/errors.hpp"
#include "jacobi/oracle.hpp"
#include "support.hpp"

using namespace jacobi;
using namespace jacobi::oracle;

namespace {

DenseMatrix from_rows(std::size_t m, std::initializer_list<double> xs) {
  DenseMatrix d(m);
  std::size_t i = 0;
  for (double x : xs) d.data()[i++] = x;
  return d;
}

DenseMatrix scaled(DenseMatrix d, double f) {
  for (auto& x : d.data()) x *= f;
  return d;
}

}  // namespace

TEST_CASE("dense_invert") {
  CHECK(dense_invert(DenseMatrix::identity(5)) == DenseMatrix::identity(5));
  const DenseMatrix inv = dense_invert(from_rows(2, {5, -2, -3, 4}));
  const DenseMatrix want = scaled(from_rows(2, {4, 2, 3, 5}), 1.0 / 14.0);
  CHECK(max_abs_difference(inv, want) <= 1e-16);
  CHECK_THROWS_AS(dense_invert(to_dense(JacobiCoefficients(1, {1, 1}, {0, 0, 0}, {1, 1}))),
                  NumericallySingular);
}

TEST_CASE("dense_det") {
  for (std::size_t m = 1; m <= 6; ++m) CHECK(dense_det(DenseMatrix::identity(m)) == 1.0);
  for (std::size_t m = 2; m <= 8; ++m) {
    CHECK(dense_det(to_dense(testing::laplacian(m))) == doctest::Approx(m + 1.0).epsilon(1e-13));
  }
  DenseMatrix d = to_dense(testing::laplacian(5));
  const double before = dense_det(d);
  for (std::size_t s = 0; s < 5; ++s) std::swap(d(1, s), d(3, s));
  CHECK(dense_det(d) == doctest::Approx(-before).epsilon(1e-13));
}

TEST_CASE("residual_inf_norm") {
  CHECK(residual_inf_norm(DenseMatrix::identity(4), DenseMatrix::identity(4)) == 0.0);
  CHECK(residual_inf_norm(from_rows(2, {5, -2, -3, 4}), scaled(from_rows(2, {4, 2, 3, 5}), 1.0 / 14.0)) <=
        1e-15);
  CHECK(residual_inf_norm(DenseMatrix::identity(3), scaled(DenseMatrix::identity(3), 2.0)) == 1.0);
  CHECK_THROWS_AS(residual_inf_norm(DenseMatrix::identity(3), DenseMatrix::identity(2)), SizeMismatch);
}

TEST_CASE("green_matrix_check on the known inverse") {
  const DenseMatrix r = scaled(from_rows(3, {3, 2, 1, 2, 4, 2, 1, 2, 3}), 0.25);
  const GreenFactorization g = green_matrix_check(r, 1e-12);
  CHECK(g.determinant == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.v[0] == 1.0);
  CHECK(g.w[0] == 1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t lo = std::min(i, j), hi = std::max(i, j);
      CHECK(g.h[j] * g.v[lo] * g.w[hi] == doctest::Approx(r(i, j)).epsilon(1e-14));
    }
  }
}

TEST_CASE("green_matrix_check rejects non-Green matrices") {
  CHECK_THROWS_AS(green_matrix_check(DenseMatrix::identity(3), 1e-8), NotGreenStructured);
  CHECK_THROWS_AS(green_matrix_check(DenseMatrix::identity(5), 1e-8), NotGreenStructured);

  Lcg64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 3 + trial % 10;
    DenseMatrix d(m);
    for (auto& x : d.data()) x = rng.uniform(-1, 1);
    for (std::size_t i = 0; i < m; ++i) d(i, i) += m;
    CHECK_THROWS_AS(green_matrix_check(d, 1e-8), NotGreenStructured);
  }
}

TEST_CASE("dense inverse of a tridiagonal matrix is a Green matrix") {
  Lcg64 rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const JacobiCoefficients j = testing::random_regular(rng, 2 + trial % 20);
    const DenseMatrix inv = dense_invert(to_dense(j));
    CHECK_NOTHROW(green_matrix_check(inv, 1e-8));
  }
}

TEST_CASE("oracle agrees with the explicit inverse") {
  Lcg64 rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 63;
    const JacobiCoefficients j = testing::random_regular(rng, m);
    const DenseMatrix dense = dense_invert(to_dense(j));
    const InverseResult r = invert(j);
    CHECK(max_abs_difference(dense, r.entries) <= 1e-8 * std::max(1.0, max_abs_entry(dense)));
    if (m <= 16) {
      CHECK(testing::relative_error(dense_det(to_dense(j)), determinant(j).to_double()) <= 1e-8);
    }
  }
}
