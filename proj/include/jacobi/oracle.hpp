#pragma once

#include <vector>

#include "jacobi/dense_matrix.hpp"

/// Brute-force reference computations used to verify the structured paths.
/// Deliberately O(m^3) and independent of everything else in the library.
namespace jacobi::oracle {

/// Gauss-Jordan with partial pivoting. Throws NumericallySingular when a
/// pivot falls below 1e-13 * ||M||_inf.
DenseMatrix dense_invert(const DenseMatrix& m);

/// Product of LU pivots times the permutation sign.
double dense_det(const DenseMatrix& m);

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// ||A B - I||_inf (maximum absolute row sum).
double residual_inf_norm(const DenseMatrix& a, const DenseMatrix& b);

/// max_ij |A_ij - B_ij|.
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_entry(const DenseMatrix& a);

/// Factors with r_ij = h_j v_min(i,j) w_max(i,j), stored 0-based for the
/// 1-based indices 1..m. Gauge: v_1 = w_1 = 1.
struct GreenFactorization {
  std::vector<double> h;
  std::vector<double> v;
  std::vector<double> w;
  /// h_1 v_1 w_m prod_{s=2}^m h_s (v_s w_{s-1} - v_{s-1} w_s)
  double determinant = 0.0;
};

/// Extracts h, v, w from the diagonal and first off-diagonals, then checks
/// every entry against the factored form to tol * max|R| and the product
/// determinant formula against dense_det(R) to relative tol. Throws
/// NotGreenStructured naming the first failing (1-based) position.
GreenFactorization green_matrix_check(const DenseMatrix& r, double tol);

}  // namespace jacobi::oracle
