#ifndef FRAMEDIL_PROJECTIVE_HPP
#define FRAMEDIL_PROJECTIVE_HPP

#include "framedil/frame.hpp"
#include "framedil/group.hpp"
#include "framedil/report.hpp"

namespace framedil {

/// T-valued 2-cocycle on a finite group: unimodular values with
///   mu(g1, g2 g3) mu(g2, g3) = mu(g1 g2, g3) mu(g1, g2)
///   mu(g, e) = mu(e, g) = 1.
struct MultiplierTable {
  FiniteGroup group;
  ComplexMatrix values; // |G| x |G|

  cdouble mu(unsigned g, unsigned h) const { return values(g, h); }
};

/// Checks unimodularity, normalization and the cocycle identity over all
/// triples. The report lists the first few violations.
Report validate_multiplier(const MultiplierTable &m, double tol = 1e-12);

MultiplierTable trivial_multiplier(const FiniteGroup &g);

/// The sign bicharacter mu((a,b),(a',b')) = (-1)^{b a'} on Z_2 x Z_2; the
/// multiplier of the Pauli pair X, Z.
MultiplierTable pauli_multiplier();

/// pi(g) pi(h) = mu(g, h) pi(gh) with unitary pi(g).
struct ProjectiveRep {
  FiniteGroup group;
  MultiplierTable multiplier;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> matrices;
};

Report validate_projective_rep(const ProjectiveRep &rep,
                               double tol_unitary = 1e-10,
                               double tol_rel = kDefaultTol);

/// lambda_g e_h = mu(g, h) e_{gh}: generalized permutation matrices on the
/// order-|G| space. Requires a valid multiplier.
ProjectiveRep projective_regular_representation(const MultiplierTable &m);

/// Pauli projective representation of Z_2 x Z_2 on C^2: (a,b) -> X^a Z^b.
ProjectiveRep pauli_projective_rep();

/// Wraps a genuine representation as a projective one with trivial
/// multiplier.
ProjectiveRep as_projective(const Representation &rep);

/// Output of the projective dilation: the canonical vector f1 with Parseval
/// orbit, the complementary mu-projective representation pi'(g) = (I-P)
/// lambda_g on K = range(I-P), its cyclic vector f2, and E = S^{1/2} on H.
/// The columns Phi(pi(g) f1) + pi'(g) f2 recover the standard basis e_g, so
/// {pi(g) f1 (+) pi'(g) f2} is an orthonormal basis of H (+) K.
struct ProjectiveDilationCertificate {
  CVec canonical_vector;       // f1 in H
  ProjectiveRep complement_rep; // pi' stored as full |G| x |G| matrices
  CVec complement_vector;      // f2 in the |G|-dim coordinate space
  ComplexMatrix embedding;     // Phi: |G| x d analysis of {pi(g) f1}
  ComplexMatrix projection;    // P = Phi Phi*
  ComplexMatrix frame_operator_sqrt; // E = S^{1/2} on H (d x d)
  FrameBounds bounds;
  double tolerance = kDefaultTol;
};

ProjectiveDilationCertificate dilate_projective(
    const ProjectiveRep &rep, const CVec &f,
    double rank_tol = kDefaultRankTol, double tol = kDefaultTol);

/// Recomputes the frame operator from (rep, f) and re-checks every
/// certificate invariant, including that pi' is mu-projective for the same
/// multiplier and that the direct-sum orbit has identity Gramian.
Report verify_projective_dilation(const ProjectiveRep &rep, const CVec &f,
                                  const ProjectiveDilationCertificate &cert);

} // namespace framedil

#endif
