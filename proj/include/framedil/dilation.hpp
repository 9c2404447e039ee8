#ifndef FRAMEDIL_DILATION_HPP
#define FRAMEDIL_DILATION_HPP

#include "framedil/frame.hpp"
#include "framedil/report.hpp"

namespace framedil {

/// Realization of an n-vector frame in C^d as the image of the standard
/// basis of C^n under a positive operator E, together with the isometry
/// embedding C^d into C^n:
///
///   E e_i = embedding * f_i,   E^2 = Gramian of the frame,
///   nonzero spectrum of E inside [sqrt(lower), sqrt(upper)], both attained.
///
/// For a Parseval frame E degenerates to the orthogonal projection onto the
/// embedded copy of C^d.
struct DilationCertificate {
  ComplexMatrix embedding;         // n x d isometry
  ComplexMatrix dilation_operator; // n x n positive Hermitian E
  FrameBounds bounds;              // squared optimal bounds (A^2, B^2)
  double tolerance = kDefaultTol;
};

/// Builds the certificate. E is computed as the square root of the Gramian
/// (equivalently Phi S^{1/2} Phi*, but with fewer compounding roundings) and
/// the embedding is the analysis operator of the canonical Parseval frame.
DilationCertificate dilate_frame(const Frame &f,
                                 double rank_tol = kDefaultRankTol,
                                 double tol = kDefaultTol);

/// Independent re-check of every certificate invariant against the frame.
/// Endpoint attainment is tested at 100x the certificate tolerance; all
/// other residuals at the certificate tolerance.
Report verify_dilation(const Frame &f, const DilationCertificate &cert);

} // namespace framedil

#endif
