#pragma once

#include "jacobi/coefficients.hpp"
#include "jacobi/dense_matrix.hpp"

/// The boundary value problem L_q(u) = f on the interior with the two
/// Sturm-Liouville conditions c1(u) = L_q(u)(0), c2(u) = L_q(u)(n+1). Its
/// resolvent kernel is the inverse of the Jacobi matrix.
namespace jacobi::sturm_liouville {

inline constexpr double kDefaultTolerance = 1e-10;

/// Invertibility verdict. denom = a(0)[b(0)Psi(0) - a(0)Psi(1)] and
/// regular <=> |denom| > tolerance_used * scale.
struct RegularityReport {
  double d_abc = 0.0;
  double denom = 0.0;
  bool regular = false;
  double tolerance_used = kDefaultTolerance;
  double scale = 0.0;
  /// Set when d_abc, denom or scale left the double range; the affected
  /// fields then hold +-inf.
  bool overflowed = false;
};

struct KernelMatrix {
  DenseMatrix entries;
  std::size_t n = 0;

  double operator()(std::size_t k, std::size_t s) const noexcept { return entries(k, s); }
};

/// c1(u) = b(0)u(0) - a(0)u(1).
double boundary_left(const JacobiCoefficients& j, const GridFunction& u);
/// c2(u) = -c(n)u(n) + b(n+1)u(n+1).
double boundary_right(const JacobiCoefficients& j, const GridFunction& u);

/// Homogeneous solution with Phi(0) = a(0), Phi(1) = b(0).
GridFunction fundamental_phi(const JacobiCoefficients& j);
/// Homogeneous solution with Psi(n) = b(n+1), Psi(n+1) = c(n).
GridFunction fundamental_psi(const JacobiCoefficients& j);

RegularityReport regularity(const JacobiCoefficients& j, double tol = kDefaultTolerance);

/// R(k,s) = Phi(min) Psi(max) rho(s) / denom. Throws SingularProblem.
KernelMatrix resolvent_kernel(const JacobiCoefficients& j, double tol = kDefaultTolerance);

/// u(k) = sum_s R(k,s) f(s), evaluated row by row without storing R.
GridFunction solve_bvp(const JacobiCoefficients& j, const GridFunction& f,
                       double tol = kDefaultTolerance);

}  // namespace jacobi::sturm_liouville
