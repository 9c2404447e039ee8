#include "framedil/frame.hpp"

#include <cmath>

#include "framedil/error.hpp"

namespace framedil {

double FrameBounds::sqrt_lower() const { return std::sqrt(lower); }
double FrameBounds::sqrt_upper() const { return std::sqrt(upper); }

bool FrameBounds::tight(double tol) const {
  return std::abs(upper - lower) <= tol * upper;
}

bool FrameBounds::parseval(double tol) const {
  return tight(tol) && std::abs(upper - 1.0) <= tol &&
         std::abs(lower - 1.0) <= tol;
}

void validate_frame(const Frame &f) {
  if (f.dim == 0)
    throw Error(ErrorKind::NotAFrame, "frame dimension must be positive");
  if (f.vectors.empty())
    throw Error(ErrorKind::NotAFrame, "frame has no vectors");
  bool any_nonzero = false;
  for (const auto &v : f.vectors) {
    if (v.size() != f.dim)
      throw Error(ErrorKind::DimMismatch, "frame vector length != dim");
    for (const auto &z : v)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorKind::NotAFrame, "frame vector has non-finite entry");
    if (norm2(v) > 0.0) any_nonzero = true;
  }
  if (!any_nonzero)
    throw Error(ErrorKind::NotAFrame, "all frame vectors are zero");
}

ComplexMatrix analysis_matrix(const Frame &f) {
  validate_frame(f);
  ComplexMatrix t(f.count(), f.dim);
  for (std::size_t i = 0; i < f.count(); ++i)
    for (std::size_t j = 0; j < f.dim; ++j)
      t(i, j) = std::conj(f.vectors[i][j]);
  return t;
}

ComplexMatrix synthesis_matrix(const Frame &f) {
  return analysis_matrix(f).adjoint();
}

ComplexMatrix frame_operator(const Frame &f) {
  validate_frame(f);
  ComplexMatrix s(f.dim, f.dim);
  for (const auto &v : f.vectors) s += outer_product(v, v);
  // Clean up the imaginary dust on the diagonal.
  for (std::size_t i = 0; i < f.dim; ++i) s(i, i) = s(i, i).real();
  return s;
}

ComplexMatrix gramian(const Frame &f) {
  validate_frame(f);
  ComplexMatrix g(f.count(), f.count());
  for (std::size_t i = 0; i < f.count(); ++i) {
    for (std::size_t j = i; j < f.count(); ++j) {
      const cdouble z = inner_product(f.vectors[j], f.vectors[i]);
      g(i, j) = z;
      g(j, i) = std::conj(z);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

FrameBounds frame_bounds(const Frame &f, double rank_tol) {
  const HermitianEigen eig = hermitian_eig(frame_operator(f));
  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  if (hi <= 0.0 || lo <= rank_tol * hi)
    throw Error(ErrorKind::NotAFrame,
                "frame operator singular (smallest eigenvalue " +
                    std::to_string(lo) + ")");
  return FrameBounds{lo, hi};
}

Frame canonical_parseval(const Frame &f, double rank_tol) {
  frame_bounds(f, rank_tol); // NotAFrame when S is singular
  const ComplexMatrix s_inv_half =
      pseudo_inverse_sqrt(frame_operator(f), rank_tol);
  Frame out;
  out.dim = f.dim;
  out.vectors.reserve(f.count());
  for (const auto &v : f.vectors) out.vectors.push_back(mat_apply(s_inv_half, v));
  return out;
}

Frame random_frame(std::size_t dim, std::size_t count, Rng &rng) {
  Frame f;
  f.dim = dim;
  f.vectors.resize(count);
  for (auto &v : f.vectors) {
    v.resize(dim);
    for (auto &z : v) z = rng.complex_normal();
  }
  return f;
}

} // namespace framedil
