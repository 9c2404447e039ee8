#include "framedil/dilation.hpp"

#include <cmath>
#include <limits>

#include "framedil/error.hpp"

namespace framedil {

DilationCertificate dilate_frame(const Frame &f, double rank_tol,
                                 double tol) {
  DilationCertificate cert;
  cert.bounds = frame_bounds(f, rank_tol); // NotAFrame when singular
  cert.tolerance = tol;
  cert.dilation_operator = matrix_sqrt_psd(gramian(f), rank_tol);
  cert.embedding = analysis_matrix(canonical_parseval(f, rank_tol));
  return cert;
}

Report verify_dilation(const Frame &f, const DilationCertificate &cert) {
  validate_frame(f);
  const std::size_t n = f.count();
  const std::size_t d = f.dim;
  const ComplexMatrix &phi = cert.embedding;
  const ComplexMatrix &e = cert.dilation_operator;
  if (phi.rows() != n || phi.cols() != d || e.rows() != n || e.cols() != n)
    throw Error(ErrorKind::ShapeMismatch,
                "certificate shapes do not match the frame");

  const double tol = cert.tolerance;
  const double attain_tol = 100.0 * tol;
  Report rep;

  rep.add("embedding_isometry",
          distance_frobenius(phi.adjoint() * phi, ComplexMatrix::identity(d)),
          tol);
  rep.add("dilation_hermitian", (e - e.adjoint()).frobenius_norm(), tol);

  // Tampered certificates may not be Hermitian at all; the check above
  // already flags that, so the spectral checks run on the Hermitian part.
  const double any_asym = std::numeric_limits<double>::infinity();
  const HermitianEigen e_eig = hermitian_eig(e, any_asym);
  rep.add("dilation_psd", std::max(0.0, -e_eig.eigenvalues.front()), tol);

  double col_res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    col_res = std::max(col_res,
                       norm2(e.column(i) - mat_apply(phi, f.vectors[i])));
  rep.add("dilation_columns", col_res, tol);

  rep.add("dilation_squared_is_gramian",
          distance_frobenius(e * e, gramian(f)), tol);

  FrameBounds bounds;
  bool is_frame = true;
  try {
    bounds = frame_bounds(f);
  } catch (const Error &) {
    is_frame = false;
  }
  rep.add_flag("frame_property", is_frame);
  if (is_frame) {
    rep.add("bounds_lower", std::abs(bounds.lower - cert.bounds.lower),
            tol * std::max(1.0, bounds.upper));
    rep.add("bounds_upper", std::abs(bounds.upper - cert.bounds.upper),
            tol * std::max(1.0, bounds.upper));

    const double a = bounds.sqrt_lower();
    const double b = bounds.sqrt_upper();
    const double scale = e_eig.max_abs_eigenvalue();
    double outside = 0.0;
    for (double lam : e_eig.eigenvalues) {
      if (std::abs(lam) <= kDefaultRankTol * scale) continue;
      outside = std::max(outside, std::max(a - lam, lam - b));
    }
    rep.add("spectrum_containment", std::max(0.0, outside), tol);

    double attain = 0.0;
    for (double want : {a, b}) {
      double best = std::abs(want - e_eig.eigenvalues.front());
      for (double lam : e_eig.eigenvalues)
        best = std::min(best, std::abs(lam - want));
      attain = std::max(attain, best);
    }
    rep.add("spectrum_endpoints_attained", attain, attain_tol);
  }
  return rep;
}

} // namespace framedil
