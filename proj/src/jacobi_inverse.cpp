#include "jacobi/jacobi_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "jacobi/chebyshev.hpp"
#include "jacobi/detail/assembly.hpp"

namespace jacobi {

namespace {

using chebyshev::ChebSequences;

double to_double_or_inf(const ScaledValue& v, bool& overflowed) {
  if (auto d = v.try_to_double()) return *d;
  overflowed = true;
  return v.sign() < 0 ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
}

std::string describe(const RegularityReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "matrix is singular: |D| = %.6g <= %.6g * %.6g", std::fabs(r.denom),
                r.tolerance_used, r.scale);
  return buf;
}

/// prefix[k] = prod_{j<k} seq(j), k = 0..count.
std::vector<ScaledValue> prefix_products(std::span<const double> seq, std::size_t count) {
  std::vector<ScaledValue> p(count + 1);
  p[0] = ScaledValue::one();
  for (std::size_t k = 0; k < count; ++k) p[k + 1] = p[k] * ScaledValue(seq[k]);
  return p;
}

std::vector<ScaledValue> powers(const ScaledValue& base, std::size_t count) {
  std::vector<ScaledValue> p(count + 1);
  p[0] = ScaledValue::one();
  for (std::size_t i = 1; i <= count; ++i) p[i] = p[i - 1] * base;
  return p;
}

template <class EntryFn>
InverseResult finish(const JacobiCoefficients& j, const FundamentalSeqJ& fs, double tol,
                     Assembly mode, const EntryFn& entry) {
  InverseResult result;
  result.report = regularity_report(j, fs, tol);
  if (!result.report.regular) throw SingularMatrix(result.report);

  result.entries = DenseMatrix(j.size());
  const bool ok = mode == Assembly::serial ? detail::assemble_serial(result.entries, entry)
                                           : detail::assemble_parallel(result.entries, entry);
  if (!ok) throw Overflow("an inverse entry exceeds the double range");

  bool ignored = false;
  result.determinant = fs.d_j;
  result.det_matrix = to_double_or_inf(fs.d_j, ignored);
  result.det_inverse = to_double_or_inf(ScaledValue::one() / fs.d_j, ignored);
  return result;
}

/// Phi_J(k) = r^k U_k, Psi_J(k) = r^{n+1-k} U_{n+1-k} for constant
/// coefficients, where r^2 = alpha gamma and u holds U_0..U_{n+2}.
FundamentalSeqJ from_chebyshev_u(const ScaledValue& r, const std::vector<ScaledValue>& u,
                                 double two_t, std::size_t n) {
  const auto rp = powers(r, n + 2);
  FundamentalSeqJ fs;
  fs.phi.resize(n + 2);
  fs.psi.resize(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    fs.phi[k] = rp[k] * u[k];
    fs.psi[k] = rp[n + 1 - k] * u[n + 1 - k];
  }
  fs.d_j = rp[n + 2] * u[n + 2];
  fs.d_j_from_phi = fs.d_j;
  fs.scale = rp[n + 2].abs() * max_magnitude(ScaledValue(two_t) * u[n + 1], u[n]);
  return fs;
}

}  // namespace

SingularMatrix::SingularMatrix(RegularityReport report)
    : Error(describe(report)), report_(report) {}

FundamentalSeqJ fundamental_seq_j(const JacobiCoefficients& j) {
  const std::size_t n = j.n();
  const int ni = static_cast<int>(n);
  std::vector<double> ac(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) ac[k] = j.a(k) * j.c(k);

  const ChebSequences seq(j.b(), ac);
  const auto p0 = chebyshev::cheb_prefix_table(ni, seq);                 // P_k(b, ac)
  const auto p1 = chebyshev::cheb_prefix_table(ni - 1, seq.shifted(1));  // P_k(b_1, a_1c_1)
  const auto tail_n = chebyshev::cheb_tail_table(ni, seq);               // P_{n-k}(b_k, a_kc_k)
  const auto tail_n1 = chebyshev::cheb_tail_table(ni - 1, seq);          // P_{n-k-1}(b_k, a_kc_k)

  const ScaledValue b0(j.b(0));
  const ScaledValue bn1(j.b(n + 1));
  const ScaledValue a0c0(ac[0]);
  const ScaledValue ancn(ac[n]);

  FundamentalSeqJ fs;
  fs.phi.resize(n + 2);
  fs.psi.resize(n + 2);
  fs.phi[0] = ScaledValue::one();
  for (int k = 1; k <= ni + 1; ++k) {
    fs.phi[static_cast<std::size_t>(k)] = b0 * p0.at(k - 1) - a0c0 * p1.at(k - 2);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    fs.psi[k] = bn1 * tail_n[k] - ancn * tail_n1[k];
  }
  fs.psi[n + 1] = ScaledValue::one();

  const ScaledValue left = b0 * fs.psi[0];
  const ScaledValue right = a0c0 * fs.psi[1];
  fs.d_j = left - right;
  fs.d_j_from_phi = bn1 * fs.phi[n + 1] - ancn * fs.phi[n];
  fs.scale = max_magnitude(left, right);
  return fs;
}

RegularityReport regularity_report(const JacobiCoefficients& j, const FundamentalSeqJ& fs,
                                   double tol) {
  if (!(tol > 0.0)) throw Error("regularity_report: tolerance must be positive");
  const std::size_t n = j.n();
  const auto pa = prefix_products(j.a(), n + 1);
  const auto pc = prefix_products(j.c(), n);

  // The two D_J terms can both be tiny without cancelling (e.g. b(0) ~ eps),
  // so the scale also carries max|J| max_k |Phi_J(k) Psi_J(k)| = max|J| max_k |r_kk D_J|:
  // a matrix is flagged when max|J| max|r_kk| >= 1/tol.
  ScaledValue diag;
  for (std::size_t k = 0; k <= n + 1; ++k) diag = max_magnitude(diag, fs.phi[k] * fs.psi[k]);
  const ScaledValue scale = max_magnitude(fs.scale, ScaledValue(max_abs_coefficient(j)) * diag);

  RegularityReport r;
  r.tolerance_used = tol;
  r.regular = !scale.is_zero() && magnitude_less(ScaledValue(tol) * scale, fs.d_j);

  // denom = a(0) D_J / prod_{s<n} c(s); D_abc = D_J / (c(0) prod_{s<=n} a(s)).
  const ScaledValue to_bvp = ScaledValue(j.a(0)) / pc[n];
  bool overflowed = false;
  r.denom = to_double_or_inf(fs.d_j * to_bvp, overflowed);
  r.scale = std::max(to_double_or_inf(scale * to_bvp.abs(), overflowed),
                     std::numeric_limits<double>::min());
  r.d_abc = to_double_or_inf(fs.d_j / (ScaledValue(j.c(0)) * pa[n + 1]), overflowed);
  r.overflowed = overflowed;
  return r;
}

InverseResult invert(const JacobiCoefficients& j, double tol, Assembly mode) {
  const std::size_t n = j.n();
  const FundamentalSeqJ fs = fundamental_seq_j(j);
  if (fs.scale.is_zero() || fs.d_j.is_zero()) throw SingularMatrix(regularity_report(j, fs, tol));

  const auto pa = prefix_products(j.a(), n + 1);
  const auto pc = prefix_products(j.c(), n + 1);
  // r_ks = [Phi_J(k)/pa(k)] [pa(s) Psi_J(s)/D]  for k <= s
  //      = [Phi_J(s)/pc(s)] [pc(k) Psi_J(k)/D]  for s <  k
  std::vector<ScaledValue> phi_a(n + 2), psi_a(n + 2), phi_c(n + 2), psi_c(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    phi_a[k] = fs.phi[k] / pa[k];
    psi_a[k] = pa[k] * fs.psi[k] / fs.d_j;
    phi_c[k] = fs.phi[k] / pc[k];
    psi_c[k] = pc[k] * fs.psi[k] / fs.d_j;
  }
  // When every factor lies within 2^+-500 each product is a normal double and
  // plain multiplication rounds exactly like the ScaledValue product.
  const auto in_window = [](const std::vector<ScaledValue>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](const ScaledValue& x) {
      return x.is_zero() || (x.exponent() > -500 && x.exponent() < 500);
    });
  };
  if (in_window(phi_a) && in_window(psi_a) && in_window(phi_c) && in_window(psi_c)) {
    const auto plain = [](const std::vector<ScaledValue>& xs) {
      std::vector<double> out;
      out.reserve(xs.size());
      for (const auto& x : xs) out.push_back(x.to_double());
      return out;
    };
    const auto da = plain(phi_a), qa = plain(psi_a), dc = plain(phi_c), qc = plain(psi_c);
    return finish(j, fs, tol, mode, [&](std::size_t k, std::size_t s) {
      return k <= s ? da[k] * qa[s] : dc[s] * qc[k];
    });
  }
  return finish(j, fs, tol, mode, [&](std::size_t k, std::size_t s) {
    return k <= s ? phi_a[k] * psi_a[s] : phi_c[s] * psi_c[k];
  });
}

ScaledValue determinant(const JacobiCoefficients& j) { return fundamental_seq_j(j).d_j; }

GridFunction solve(const JacobiCoefficients& j, const GridFunction& f, double tol) {
  if (f.size() != j.size()) throw SizeMismatch("solve: right-hand side size differs from the matrix");
  const std::size_t m = j.size();
  const FundamentalSeqJ fs = fundamental_seq_j(j);
  const RegularityReport report = regularity_report(j, fs, tol);
  if (!report.regular) throw SingularMatrix(report);

  const auto pa = prefix_products(j.a(), m);
  const auto pc = prefix_products(j.c(), m);
  // u(k) = pc(k)Psi_J(k)/D * sum_{s<k} Phi_J(s)f(s)/pc(s)
  //      + Phi_J(k)/pa(k)   * sum_{s>=k} pa(s)Psi_J(s)f(s)/D
  std::vector<ScaledValue> upper(m + 1);
  for (std::size_t s = m; s-- > 0;) {
    upper[s] = upper[s + 1] + pa[s] * fs.psi[s] * ScaledValue(f[s]) / fs.d_j;
  }
  std::vector<double> u(m);
  ScaledValue lower;
  for (std::size_t k = 0; k < m; ++k) {
    const ScaledValue value =
        pc[k] * fs.psi[k] / fs.d_j * lower + fs.phi[k] / pa[k] * upper[k];
    u[k] = value.to_double();
    lower += fs.phi[k] * ScaledValue(f[k]) / pc[k];
  }
  return GridFunction::computed(std::move(u));
}

JacobiCoefficients ConstantInteriorSpec::to_coefficients() const {
  if (size < 3) throw LengthMismatch("constant-interior matrix needs size >= 3");
  const std::size_t n = size - 2;
  std::vector<double> a(n + 1, alpha), b(n + 2, beta), c(n + 1, gamma);
  a[0] = a0;
  b[0] = b0;
  b[n + 1] = bn1;
  c[n] = cn;
  return JacobiCoefficients(n, std::move(a), std::move(b), std::move(c));
}

InverseResult invert_constant_interior(const ConstantInteriorSpec& spec, double tol, Assembly mode) {
  const JacobiCoefficients j = spec.to_coefficients();
  const double product = spec.alpha * spec.gamma;
  if (product < 0.0) return invert(j, tol, mode);

  const std::size_t n = j.n();
  const double root = std::sqrt(product);
  const double q = spec.beta / (2.0 * root);
  const auto u = chebyshev::cheb_u_table(static_cast<int>(n), q);
  const auto at = [&](long k) { return k < 0 ? ScaledValue{} : u[static_cast<std::size_t>(k)]; };

  const ScaledValue sq(root), alpha(spec.alpha), gamma(spec.gamma);
  const ScaledValue a0(spec.a0), b0(spec.b0), bn1(spec.bn1), cn(spec.cn);
  const auto sq_pow = [&](long e) { return ScaledValue::pow(sq, e); };
  const long nl = static_cast<long>(n);

  FundamentalSeqJ fs;
  fs.phi.resize(n + 2);
  fs.psi.resize(n + 2);
  fs.phi[0] = ScaledValue::one();
  for (long k = 1; k <= nl + 1; ++k) {
    fs.phi[static_cast<std::size_t>(k)] =
        sq_pow(k - 2) * (b0 * sq * at(k - 1) - a0 * gamma * at(k - 2));
  }
  for (long k = 0; k <= nl; ++k) {
    fs.psi[static_cast<std::size_t>(k)] =
        sq_pow(nl - k - 1) * (bn1 * sq * at(nl - k) - cn * alpha * at(nl - k - 1));
  }
  fs.psi[n + 1] = ScaledValue::one();
  const ScaledValue d_small = b0 * sq * (bn1 * sq * at(nl) - cn * alpha * at(nl - 1)) -
                              a0 * gamma * (bn1 * sq * at(nl - 1) - cn * alpha * at(nl - 2));
  fs.d_j = d_small * sq_pow(nl - 2);
  fs.d_j_from_phi = bn1 * fs.phi[n + 1] - alpha * cn * fs.phi[n];
  fs.scale = max_magnitude(b0 * fs.psi[0], a0 * gamma * fs.psi[1]);
  if (fs.d_j.is_zero()) throw SingularMatrix(regularity_report(j, fs, tol));

  const auto alpha_pow = powers(alpha, n + 1);
  const auto gamma_pow = powers(gamma, n + 1);
  const ScaledValue inv_d = ScaledValue::one() / fs.d_j;
  return finish(j, fs, tol, mode, [&](std::size_t k, std::size_t s) {
    if (k <= s) {
      // prod_{i=k}^{s-1} a(i) with a(0) = a0 and a(i) = alpha otherwise.
      const ScaledValue prod = k == 0 ? (s == 0 ? ScaledValue::one() : a0 * alpha_pow[s - 1])
                                      : alpha_pow[s - k];
      return prod * fs.phi[k] * fs.psi[s] * inv_d;
    }
    // prod_{i=s}^{k-1} c(i) with c(n) = cn and c(i) = gamma otherwise.
    const ScaledValue prod = k == n + 1 ? cn * gamma_pow[n - s] : gamma_pow[k - s];
    return prod * fs.phi[s] * fs.psi[k] * inv_d;
  });
}

void ToeplitzSpec::validate() const {
  if (size < 2) throw LengthMismatch("Toeplitz matrix needs size >= 2");
  if (alpha == 0.0) throw ZeroOffDiagonal(0);
  if (gamma == 0.0) throw ZeroOffDiagonal(0);
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw NonFiniteInput("Toeplitz parameters must be finite");
  }
}

std::optional<double> ToeplitzSpec::q_param() const {
  const double product = alpha * gamma;
  if (!(product > 0.0)) return std::nullopt;
  return beta / (2.0 * std::sqrt(product));
}

JacobiCoefficients ToeplitzSpec::to_coefficients() const {
  validate();
  const std::size_t n = size - 2;
  return JacobiCoefficients(n, std::vector<double>(n + 1, alpha), std::vector<double>(n + 2, beta),
                            std::vector<double>(n + 1, gamma));
}

InverseResult invert_toeplitz(const ToeplitzSpec& spec, double tol, Assembly mode) {
  const JacobiCoefficients j = spec.to_coefficients();
  const auto q = spec.q_param();
  if (!q) return invert(j, tol, mode);

  const std::size_t n = j.n();
  const double root = std::sqrt(spec.alpha * spec.gamma);
  const auto u = chebyshev::cheb_u_table(static_cast<int>(n + 2), *q);
  const ScaledValue sq(root);
  const FundamentalSeqJ fs = from_chebyshev_u(sq, u, 2.0 * *q, n);
  if (fs.d_j.is_zero()) throw SingularMatrix(regularity_report(j, fs, tol));

  // alpha^{s-k} sqrt(ag)^{k-s-1} = (alpha/sqrt(ag))^{s-k} / sqrt(ag), same for gamma.
  const auto up = powers(ScaledValue(spec.alpha) / sq, n + 1);
  const auto down = powers(ScaledValue(spec.gamma) / sq, n + 1);
  const ScaledValue inv = ScaledValue::one() / (sq * u[n + 2]);
  return finish(j, fs, tol, mode, [&](std::size_t k, std::size_t s) {
    if (k <= s) return up[s - k] * u[k] * u[n - s + 1] * inv;
    return down[k - s] * u[s] * u[n - k + 1] * inv;
  });
}

InverseResult invert_sym_toeplitz(double alpha, double beta, std::size_t size, double tol,
                                  Assembly mode) {
  const ToeplitzSpec spec{.alpha = alpha, .beta = beta, .gamma = alpha, .size = size};
  const JacobiCoefficients j = spec.to_coefficients();
  const std::size_t n = j.n();
  const double t = beta / (2.0 * alpha);
  const auto u = chebyshev::cheb_u_table(static_cast<int>(n + 2), t);
  const FundamentalSeqJ fs = from_chebyshev_u(ScaledValue(alpha), u, 2.0 * t, n);
  if (fs.d_j.is_zero()) throw SingularMatrix(regularity_report(j, fs, tol));

  const ScaledValue inv = ScaledValue::one() / (ScaledValue(alpha) * u[n + 2]);
  return finish(j, fs, tol, mode, [&](std::size_t k, std::size_t s) {
    const std::size_t lo = std::min(k, s);
    const std::size_t hi = std::max(k, s);
    return u[lo] * u[n - hi + 1] * inv;
  });
}

}  // namespace jacobi
