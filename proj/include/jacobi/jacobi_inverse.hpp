#pragma once

#include <optional>
#include <vector>

#include "jacobi/coefficients.hpp"
#include "jacobi/dense_matrix.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/scaled_value.hpp"
#include "jacobi/sturm_liouville.hpp"

/// Explicit inverse and determinant of J(a, b, c) from the Chebyshev-form
/// fundamental sequences Phi_J, Psi_J and the scalar D_J = det J.
namespace jacobi {

inline constexpr double kDefaultTolerance = sturm_liouville::kDefaultTolerance;

using sturm_liouville::RegularityReport;

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(RegularityReport report);
  const RegularityReport& report() const noexcept { return report_; }

 private:
  RegularityReport report_;
};

/// Phi_J(k) is the leading principal minor of order k and Psi_J(k) the
/// trailing minor on rows k+1..n+1, both written through Chebyshev functions
/// of the coefficient sequences.
struct FundamentalSeqJ {
  std::vector<ScaledValue> phi;  ///< Phi_J(0..n+1), phi[0] = 1
  std::vector<ScaledValue> psi;  ///< Psi_J(0..n+1), psi[n+1] = 1
  ScaledValue d_j;               ///< b(0)Psi_J(0) - a(0)c(0)Psi_J(1)
  ScaledValue d_j_from_phi;      ///< b(n+1)Phi_J(n+1) - a(n)c(n)Phi_J(n)
  ScaledValue scale;             ///< max(|b(0)Psi_J(0)|, |a(0)c(0)Psi_J(1)|)
};

struct InverseResult {
  DenseMatrix entries;
  double det_inverse = 0.0;  ///< 1/D_J; +-0 or +-inf when out of range
  double det_matrix = 0.0;   ///< D_J; +-inf when out of range
  ScaledValue determinant;   ///< D_J without range limits
  RegularityReport report;
};

/// Row assembly of the (n+2)^2 entries. Both produce bit-identical matrices;
/// the serial kernel is kept as the reference.
enum class Assembly { serial, parallel };

FundamentalSeqJ fundamental_seq_j(const JacobiCoefficients& j);

/// Verdict |D_J| > tol * scale, reported in the units of the boundary value
/// problem (denom = a(0) D_J / prod_{s<n} c(s)).
RegularityReport regularity_report(const JacobiCoefficients& j, const FundamentalSeqJ& fs,
                                   double tol = kDefaultTolerance);

/// Throws SingularMatrix, or Overflow if an entry leaves the double range.
InverseResult invert(const JacobiCoefficients& j, double tol = kDefaultTolerance,
                     Assembly mode = Assembly::parallel);

/// D_J, which equals det J. O(n).
ScaledValue determinant(const JacobiCoefficients& j);

/// J u = f in O(n), using the semiseparable structure of the inverse.
GridFunction solve(const JacobiCoefficients& j, const GridFunction& f,
                   double tol = kDefaultTolerance);

/// a(j) = alpha, b(j) = beta for j = 1..n and c(j) = gamma for j = 0..n-1;
/// the first and last rows are free.
struct ConstantInteriorSpec {
  double a0 = 0.0;
  double b0 = 0.0;
  double bn1 = 0.0;
  double cn = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t size = 0;  ///< n+2, at least 3

  JacobiCoefficients to_coefficients() const;
};

InverseResult invert_constant_interior(const ConstantInteriorSpec& spec,
                                       double tol = kDefaultTolerance,
                                       Assembly mode = Assembly::parallel);

/// Tridiagonal Toeplitz matrix with diagonal beta, superdiagonal -alpha and
/// subdiagonal -gamma.
struct ToeplitzSpec {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t size = 0;  ///< n+2, at least 2

  /// Throws ZeroOffDiagonal or LengthMismatch.
  void validate() const;
  /// beta / (2 sqrt(alpha gamma)) when alpha gamma > 0.
  std::optional<double> q_param() const;
  JacobiCoefficients to_coefficients() const;
};

/// Closed form through U_k(q); falls back to invert() when alpha gamma < 0.
InverseResult invert_toeplitz(const ToeplitzSpec& spec, double tol = kDefaultTolerance,
                              Assembly mode = Assembly::parallel);

/// r_ks = U_min(t) U_{n-max+1}(t) / (alpha U_{n+2}(t)), t = beta / (2 alpha).
InverseResult invert_sym_toeplitz(double alpha, double beta, std::size_t size,
                                  double tol = kDefaultTolerance,
                                  Assembly mode = Assembly::parallel);

}  // namespace jacobi
