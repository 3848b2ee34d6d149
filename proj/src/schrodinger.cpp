#include "jacobi/schrodinger.hpp"

#include <string>
#include <vector>

#include "jacobi/errors.hpp"

namespace jacobi::schrodinger {

namespace {

void require_size(const JacobiCoefficients& j, const GridFunction& u, const char* what) {
  if (u.size() != j.size()) {
    throw SizeMismatch(std::string(what) + ": expected " + std::to_string(j.size()) +
                       " values, got " + std::to_string(u.size()));
  }
}

}  // namespace

GridFunction apply(const JacobiCoefficients& j, const GridFunction& u) {
  require_size(j, u, "apply");
  const std::size_t n = j.n();
  const GridFunction q = potential(j);
  std::vector<double> out(n + 2);
  out[0] = j.a(0) * (u[0] - u[1]) + q[0] * u[0];
  for (std::size_t k = 1; k <= n; ++k) {
    out[k] = j.a(k) * (u[k] - u[k + 1]) + j.c(k - 1) * (u[k] - u[k - 1]) + q[k] * u[k];
  }
  out[n + 1] = j.c(n) * (u[n + 1] - u[n]) + q[n + 1] * u[n + 1];
  return GridFunction::computed(std::move(out));
}

GridFunction solve_ivp(const JacobiCoefficients& j, const IvpSpec& spec) {
  require_size(j, spec.data, "solve_ivp");
  const std::size_t n = j.n();
  if (spec.m > n) throw IndexOutOfRange("solve_ivp: anchor m = " + std::to_string(spec.m));
  const auto& f = spec.data;
  std::vector<double> u(n + 2, 0.0);
  u[spec.m] = spec.alpha;
  u[spec.m + 1] = spec.beta;
  for (std::size_t k = spec.m + 1; k <= n; ++k) {
    u[k + 1] = (j.b(k) * u[k] - j.c(k - 1) * u[k - 1] - f[k]) / j.a(k);
  }
  for (std::size_t k = spec.m; k >= 1; --k) {
    u[k - 1] = (j.b(k) * u[k] - j.a(k) * u[k + 1] - f[k]) / j.c(k - 1);
  }
  return GridFunction::computed(std::move(u));
}

GridFunction wronskian(const GridFunction& u, const GridFunction& v) {
  if (u.size() != v.size()) throw SizeMismatch("wronskian: operand sizes differ");
  const std::size_t last = u.size() - 1;
  std::vector<double> w(u.size());
  for (std::size_t k = 0; k < last; ++k) w[k] = u[k] * v[k + 1] - v[k] * u[k + 1];
  w[last] = w[last - 1];
  return GridFunction::computed(std::move(w));
}

GridFunction green_ivp(const JacobiCoefficients& j, std::size_t s) {
  const std::size_t n = j.n();
  if (s > n + 1) throw IndexOutOfRange("green_ivp: s = " + std::to_string(s));
  IvpSpec spec{.data = GridFunction::zeros(n)};
  if (s <= n) {
    spec.m = s;
    spec.alpha = 0.0;
    spec.beta = -1.0 / j.a(s);
  } else {
    spec.m = n;
    spec.alpha = 1.0 / j.a(n + 1);
    spec.beta = 0.0;
  }
  return solve_ivp(j, spec);
}

GridFunction particular_solution(const JacobiCoefficients& j, const GridFunction& f, std::size_t m) {
  require_size(j, f, "particular_solution");
  const std::size_t n = j.n();
  if (m > n) throw IndexOutOfRange("particular_solution: anchor m = " + std::to_string(m));

  std::vector<GridFunction> columns;
  columns.reserve(n + 2);
  for (std::size_t s = 0; s <= n + 1; ++s) columns.push_back(green_ivp(j, s));

  std::vector<double> u(n + 2, 0.0);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const std::size_t lo = std::min(k, m) + 1;
    const std::size_t hi = std::max(k, m);
    double acc = 0.0;
    for (std::size_t s = lo; s <= hi; ++s) acc += columns[s][k] * f[s];
    u[k] = k < m ? -acc : acc;
  }
  return GridFunction::computed(std::move(u));
}

}  // namespace jacobi::schrodinger
