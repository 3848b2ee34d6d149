#include "jacobi/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jacobi/errors.hpp"
#include "jacobi/schrodinger.hpp"

namespace jacobi::sturm_liouville {

namespace {

std::vector<double> rho_values(const JacobiCoefficients& j) {
  std::vector<double> rho(j.size());
  rho[0] = 1.0;
  for (std::size_t k = 1; k < j.size(); ++k) rho[k] = rho[k - 1] * j.a(k - 1) / j.c(k - 1);
  return rho;
}

void require_regular(const RegularityReport& report) {
  if (!report.regular) {
    throw SingularProblem("boundary value problem is singular: |denom| = " +
                          std::to_string(std::fabs(report.denom)) + " <= " +
                          std::to_string(report.tolerance_used) + " * " +
                          std::to_string(report.scale));
  }
}

}  // namespace

double boundary_left(const JacobiCoefficients& j, const GridFunction& u) {
  return j.b(0) * u[0] - j.a(0) * u[1];
}

double boundary_right(const JacobiCoefficients& j, const GridFunction& u) {
  const std::size_t n = j.n();
  return -j.c(n) * u[n] + j.b(n + 1) * u[n + 1];
}

GridFunction fundamental_phi(const JacobiCoefficients& j) {
  return schrodinger::solve_ivp(
      j, {.m = 0, .alpha = j.a(0), .beta = j.b(0), .data = GridFunction::zeros(j.n())});
}

GridFunction fundamental_psi(const JacobiCoefficients& j) {
  const std::size_t n = j.n();
  return schrodinger::solve_ivp(
      j, {.m = n, .alpha = j.b(n + 1), .beta = j.c(n), .data = GridFunction::zeros(n)});
}

RegularityReport regularity(const JacobiCoefficients& j, double tol) {
  if (!(tol > 0.0)) throw Error("regularity: tolerance must be positive");
  const GridFunction phi = fundamental_phi(j);
  const GridFunction psi = fundamental_psi(j);

  RegularityReport r;
  r.tolerance_used = tol;
  const double left = j.a(0) * j.b(0) * psi[0];
  const double right = j.a(0) * j.a(0) * psi[1];
  r.denom = left - right;
  // Besides the two terms of denom, max|J| max_k |Phi(k) Psi(k) rho(k)| = max|J| max_k |R(k,k) denom|
  // catches problems whose terms are small without cancelling.
  double diag = 0.0;
  double rho = 1.0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    diag = std::max(diag, std::fabs(phi[k] * psi[k] * rho));
    rho *= j.a(k) / j.c(k);
  }
  r.scale = std::max({std::fabs(left), std::fabs(right), max_abs_coefficient(j) * diag,
                      std::numeric_limits<double>::min()});
  r.regular = std::fabs(r.denom) > tol * r.scale;
  r.d_abc = boundary_right(j, phi) / (j.a(0) * j.c(0));
  r.overflowed = !std::isfinite(r.d_abc) || !std::isfinite(r.denom) || !std::isfinite(r.scale);
  return r;
}

KernelMatrix resolvent_kernel(const JacobiCoefficients& j, double tol) {
  const RegularityReport report = regularity(j, tol);
  require_regular(report);
  const GridFunction phi = fundamental_phi(j);
  const GridFunction psi = fundamental_psi(j);
  const std::vector<double> rho = rho_values(j);

  const std::size_t m = j.size();
  KernelMatrix kernel{DenseMatrix(m), j.n()};
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t s = 0; s < m; ++s) {
      kernel.entries(k, s) = phi[std::min(k, s)] * psi[std::max(k, s)] * rho[s] / report.denom;
    }
  }
  return kernel;
}

GridFunction solve_bvp(const JacobiCoefficients& j, const GridFunction& f, double tol) {
  if (f.size() != j.size()) throw SizeMismatch("solve_bvp: data size differs from the path");
  const RegularityReport report = regularity(j, tol);
  require_regular(report);
  const GridFunction phi = fundamental_phi(j);
  const GridFunction psi = fundamental_psi(j);
  const std::vector<double> rho = rho_values(j);

  // u(k) = [Psi(k) sum_{s<=k} Phi(s)rho(s)f(s) + Phi(k) sum_{s>k} Psi(s)rho(s)f(s)] / denom
  const std::size_t m = j.size();
  std::vector<double> upper(m + 1, 0.0);
  for (std::size_t s = m; s-- > 0;) upper[s] = upper[s + 1] + psi[s] * rho[s] * f[s];
  std::vector<double> u(m);
  double lower = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    lower += phi[k] * rho[k] * f[k];
    u[k] = (psi[k] * lower + phi[k] * upper[k + 1]) / report.denom;
  }
  return GridFunction::computed(std::move(u));
}

}  // namespace jacobi::sturm_liouville
