#pragma once

#include <cstddef>

#include "jacobi/coefficients.hpp"

/// The discrete Schrodinger operator L_q on the path and its initial value
/// problems. Everything here works in plain doubles by direct recurrence and
/// shares no code with the Chebyshev-form inverse, which it is used to check.
namespace jacobi::schrodinger {

/// L_q(u) = f on the interior, u(m) = alpha, u(m+1) = beta.
struct IvpSpec {
  std::size_t m = 0;
  double alpha = 0.0;
  double beta = 0.0;
  GridFunction data;
};

/// L_q(u) on the whole path; equal to to_dense(J) * u.
GridFunction apply(const JacobiCoefficients& j, const GridFunction& u);

GridFunction solve_ivp(const JacobiCoefficients& j, const IvpSpec& spec);

/// Casoratian w(k) = u(k)v(k+1) - v(k)u(k+1), with w(n+1) = w(n).
GridFunction wronskian(const GridFunction& u, const GridFunction& v);

/// g(., s): homogeneous solution with g(s,s) = 0, g(s+1,s) = -1/a(s) for
/// s <= n, and g(n+1,n+1) = 0, g(n,n+1) = 1/a(n+1) for s = n+1.
GridFunction green_ivp(const JacobiCoefficients& j, std::size_t s);

/// The solution of L_q(u) = f on the interior with u(m) = u(m+1) = 0, built
/// from Green's function columns. The sum runs from m+1 to k as an oriented
/// sum, so nodes left of the anchor pick up a minus sign.
GridFunction particular_solution(const JacobiCoefficients& j, const GridFunction& f, std::size_t m);

}  // namespace jacobi::schrodinger
