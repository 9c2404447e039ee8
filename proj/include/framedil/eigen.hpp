#ifndef FRAMEDIL_EIGEN_HPP
#define FRAMEDIL_EIGEN_HPP

#include <functional>
#include <vector>

#include "framedil/matrix.hpp"

namespace framedil {

/// Eigendecomposition of a Hermitian matrix: A = V diag(lambda) V*.
/// Eigenvalues ascending; each eigenvector column phase-normalized so its
/// first non-negligible component is real positive, which makes the output
/// deterministic and golden-file friendly.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors; // columns

  double max_abs_eigenvalue() const;
};

/// Default relative threshold below which an eigenvalue counts as zero.
/// Every rank decision in the toolkit routes through this one constant.
inline constexpr double kDefaultRankTol = 1e-8;

inline constexpr double kDefaultTol = 1e-9;

/// Cyclic Jacobi for complex Hermitian matrices. Unconditionally stable and
/// plenty fast at desk scale. `tol` bounds the allowed asymmetry of the
/// input, not the achieved accuracy; convergence runs to near machine
/// precision.
HermitianEigen hermitian_eig(const ComplexMatrix &a, double tol = 1e-10);

/// V f(diag) V* for Hermitian input. Throws DomainError when f produces a
/// non-finite value at some eigenvalue. Result is exactly Hermitian.
ComplexMatrix spectral_map(const ComplexMatrix &a,
                           const std::function<double(double)> &f,
                           double tol = 1e-10);

/// Square root of a positive semidefinite matrix. Eigenvalues in
/// [-rank_tol*scale, 0) are clamped to zero; anything lower raises NotPSD.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a,
                              double rank_tol = kDefaultRankTol);

/// B = A^{-1/2} on range(A), zero on the kernel; eigenvalues at most
/// rank_tol relative to the largest map to zero. For invertible A this is
/// the true inverse square root.
ComplexMatrix pseudo_inverse_sqrt(const ComplexMatrix &a,
                                  double rank_tol = kDefaultRankTol);

struct SpectrumReport {
  bool pass = false;
  std::vector<double> eigenvalues;
  std::vector<double> outside_range;  // nonzero eigenvalues outside bounds
  std::vector<double> unattained;     // `inner` values missing from spectrum
};

/// Checks that every eigenvalue above the rank threshold lies in
/// [outer_lo - tol, outer_hi + tol] and that each value in `inner` is within
/// tol of some eigenvalue (containment plus attainment).
SpectrumReport spectrum_within(const ComplexMatrix &a,
                               const std::vector<double> &inner,
                               double outer_lo, double outer_hi, double tol,
                               double rank_tol = kDefaultRankTol);

} // namespace framedil

#endif
