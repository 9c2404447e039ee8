#ifndef FRAMEDIL_GABOR_HPP
#define FRAMEDIL_GABOR_HPP

#include "framedil/projective.hpp"

namespace framedil {

/// Finite Gabor system on C^N over the product lattice a Z_N x b Z_N
/// (a | N, b | N). This is the finite model of the continuous
/// time-frequency lattice: the translation T shifts coordinates cyclically,
/// the modulation M multiplies by N-th roots of unity, and the pairing in
/// the multiplier becomes 2 pi m n' / N. The one place the toolkit trades
/// the continuum setting for a finite one.
struct FiniteGaborSystem {
  std::size_t N = 0;
  std::size_t a = 1;
  std::size_t b = 1;
  CVec window;
};

/// Throws InvalidLattice unless a | N and b | N; window must be a nonzero
/// N-vector.
void validate_gabor_system(const FiniteGaborSystem &sys);

/// The lattice group Z_{N/a} x Z_{N/b} with element (j, k) acting as
/// pi(m, n) = M^n T^m, m = j a, n = k b, and multiplier
/// mu((m,n),(m',n')) = exp(-2 pi i m n' / N). Phases come from one shared
/// root-of-unity table so the cocycle identities hold to machine precision.
ProjectiveRep gabor_representation(const FiniteGaborSystem &sys);

/// Translation by one and modulation by one on C^N (the generators).
ComplexMatrix gabor_translation(std::size_t n_dim);
ComplexMatrix gabor_modulation(std::size_t n_dim);

/// Dilates the orbit of the window; delegates to the projective machinery.
/// E = S^{1/2} has nonzero spectrum inside the square-rooted optimal frame
/// bounds with both endpoints attained.
ProjectiveDilationCertificate gabor_dilation(
    const FiniteGaborSystem &sys, double rank_tol = kDefaultRankTol,
    double tol = kDefaultTol);

} // namespace framedil

#endif
