#include "jacobi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "jacobi/errors.hpp"

namespace jacobi::oracle {

namespace {

double inf_norm(const DenseMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    double row = 0.0;
    for (double v : m.row(i)) row += std::fabs(v);
    best = std::max(best, row);
  }
  return best;
}

void require_same_order(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
  if (a.order() != b.order()) throw SizeMismatch(std::string(what) + ": matrix orders differ");
}

std::string position(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

DenseMatrix dense_invert(const DenseMatrix& m) {
  const std::size_t n = m.order();
  const double threshold = 1e-13 * inf_norm(m);
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (!(std::fabs(a(pivot, col)) > threshold)) {
      throw NumericallySingular("pivot " + std::to_string(col) + " below 1e-13 * ||M||_inf");
    }
    if (pivot != col) {
      std::swap_ranges(a.row(col).begin(), a.row(col).end(), a.row(pivot).begin());
      std::swap_ranges(inv.row(col).begin(), inv.row(col).end(), inv.row(pivot).begin());
    }
    const double p = a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) /= p;
      inv(col, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a(r, col);
      if (factor == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= factor * a(col, k);
        inv(r, k) -= factor * inv(col, k);
      }
    }
  }
  return inv;
}

double dense_det(const DenseMatrix& m) {
  const std::size_t n = m.order();
  DenseMatrix a = m;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap_ranges(a.row(col).begin(), a.row(col).end(), a.row(pivot).begin());
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      for (std::size_t k = col; k < n; ++k) a(r, k) -= factor * a(col, k);
    }
  }
  return det;
}

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  require_same_order(lhs, rhs, "multiply");
  const std::size_t n = lhs.order();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double l = lhs(i, k);
      if (l == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

double residual_inf_norm(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b, "residual_inf_norm");
  DenseMatrix r = multiply(a, b);
  for (std::size_t i = 0; i < r.order(); ++i) r(i, i) -= 1.0;
  return inf_norm(r);
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b, "max_abs_difference");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    best = std::max(best, std::fabs(a.data()[i] - b.data()[i]));
  }
  return best;
}

double max_abs_entry(const DenseMatrix& a) {
  double best = 0.0;
  for (double v : a.data()) best = std::max(best, std::fabs(v));
  return best;
}

GreenFactorization green_matrix_check(const DenseMatrix& r, double tol) {
  const std::size_t m = r.order();
  if (m == 0) throw SizeMismatch("green_matrix_check: empty matrix");
  const auto require_nonzero = [&](std::size_t i, std::size_t j) {
    if (r(i, j) == 0.0) {
      throw NotGreenStructured(i + 1, j + 1, "zero entry at " + position(i + 1, j + 1) +
                                                 " blocks factor extraction");
    }
  };

  GreenFactorization g;
  g.h.resize(m);
  g.v.resize(m);
  g.w.resize(m);
  std::vector<double> hw(m);  // h_i w_i
  require_nonzero(0, 0);
  g.w[0] = 1.0;
  g.v[0] = 1.0;
  hw[0] = r(0, 0);
  g.h[0] = r(0, 0);
  for (std::size_t i = 1; i < m; ++i) {
    require_nonzero(i - 1, i - 1);
    require_nonzero(i, i - 1);
    require_nonzero(i - 1, i);
    g.w[i] = g.w[i - 1] * r(i, i - 1) / r(i - 1, i - 1);
    hw[i] = hw[i - 1] * r(i - 1, i) / r(i - 1, i - 1);
    g.h[i] = hw[i] / g.w[i];
    g.v[i] = r(i, i) / hw[i];
  }

  const double bound = tol * max_abs_entry(r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double model = g.h[j] * g.v[std::min(i, j)] * g.w[std::max(i, j)];
      if (!(std::fabs(model - r(i, j)) <= bound)) {
        throw NotGreenStructured(i + 1, j + 1, "entry " + position(i + 1, j + 1) +
                                                   " does not follow h_j v_min w_max");
      }
    }
  }

  double det = g.h[0] * g.v[0] * g.w[m - 1];
  for (std::size_t s = 1; s < m; ++s) det *= g.h[s] * (g.v[s] * g.w[s - 1] - g.v[s - 1] * g.w[s]);
  g.determinant = det;
  const double reference = dense_det(r);
  if (!(std::fabs(det - reference) <= tol * std::max(std::fabs(det), std::fabs(reference)))) {
    throw NotGreenStructured(0, 0, "determinant product formula " + std::to_string(det) +
                                       " disagrees with the dense determinant " +
                                       std::to_string(reference));
  }
  return g;
}

}  // namespace jacobi::oracle
