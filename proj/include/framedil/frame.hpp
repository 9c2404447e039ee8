#ifndef FRAMEDIL_FRAME_HPP
#define FRAMEDIL_FRAME_HPP

#include <cstddef>
#include <vector>

#include "framedil/eigen.hpp"
#include "framedil/matrix.hpp"
#include "framedil/rng.hpp"

namespace framedil {

/// Ordered list of vectors in a d-dimensional complex space. Duplicates are
/// allowed on purpose: group orbits repeat vectors.
struct Frame {
  std::size_t dim = 0;
  std::vector<CVec> vectors;

  std::size_t count() const { return vectors.size(); }
};

/// Optimal frame bounds as in the energy inequality
/// lower*|f|^2 <= sum_i |<f, f_i>|^2 <= upper*|f|^2.
/// These are the squared constants (A^2, B^2); the dilation certificates
/// additionally expose their square roots (A, B).
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;

  double sqrt_lower() const;
  double sqrt_upper() const;
  bool tight(double tol = kDefaultTol) const;
  bool parseval(double tol = kDefaultTol) const;
};

/// Throws unless dimensions are consistent, every vector is finite and at
/// least one vector is nonzero.
void validate_frame(const Frame &f);

/// n x d matrix T with (T x)_i = <x, f_i>; row i is the conjugate of f_i.
ComplexMatrix analysis_matrix(const Frame &f);

/// d x n adjoint of the analysis matrix; column i is f_i.
ComplexMatrix synthesis_matrix(const Frame &f);

/// S = sum_i f_i f_i*, Hermitian positive semidefinite.
ComplexMatrix frame_operator(const Frame &f);

/// n x n matrix of pairwise inner products, (i,j) = <f_j, f_i>; equals the
/// product analysis * synthesis.
ComplexMatrix gramian(const Frame &f);

/// Extreme eigenvalues of the frame operator. NotAFrame when the smallest
/// eigenvalue is below rank_tol relative to the largest.
FrameBounds frame_bounds(const Frame &f, double rank_tol = kDefaultRankTol);

/// {S^{-1/2} f_i}: always a Parseval frame when f is a frame.
Frame canonical_parseval(const Frame &f, double rank_tol = kDefaultRankTol);

/// Seeded Gaussian frame for tests and `gen frame-random`.
Frame random_frame(std::size_t dim, std::size_t count, Rng &rng);

} // namespace framedil

#endif
