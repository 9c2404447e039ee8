#include "framedil/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framedil/error.hpp"

namespace framedil {

double HermitianEigen::max_abs_eigenvalue() const {
  double m = 0.0;
  for (double v : eigenvalues) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// One Jacobi rotation zeroing A(p,q). A is kept exactly Hermitian: only the
// upper triangle drives the angles, and mirrored entries are written as
// conjugates.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p,
                   std::size_t q) {
  const cdouble apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double theta = (alpha - beta) / (2.0 * r);
  // Smaller-magnitude root of t^2 - 2 theta t - 1 = 0 keeps |angle| <= pi/4.
  double t;
  if (theta >= 0.0)
    t = -1.0 / (theta + std::sqrt(theta * theta + 1.0));
  else
    t = 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cdouble s = (t * c) * (apq / r);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const cdouble akp = a(k, p);
    const cdouble akq = a(k, q);
    a(k, p) = c * akp - std::conj(s) * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = alpha - t * r;
  a(q, q) = beta + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const cdouble vkp = v(k, p);
    const cdouble vkq = v(k, q);
    v(k, p) = c * vkp - std::conj(s) * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

double max_offdiag(const ComplexMatrix &a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

void phase_normalize_columns(ComplexMatrix &v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      const double m = std::abs(v(i, j));
      if (m > 1e-12) {
        const cdouble u = std::conj(v(i, j)) / m;
        for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) *= u;
        break;
      }
    }
  }
}

} // namespace

HermitianEigen hermitian_eig(const ComplexMatrix &a, double tol) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "hermitian_eig");
  if (!a.all_finite())
    throw Error(ErrorKind::DomainError, "hermitian_eig: non-finite entries");
  const double asym = a.hermitian_residual();
  const double scale = std::max(1.0, a.max_abs());
  if (asym > tol * scale)
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: asymmetry " + std::to_string(asym));

  const std::size_t n = a.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = 0.5 * (a(i, i) + std::conj(a(i, i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      const cdouble z = 0.5 * (a(i, j) + std::conj(a(j, i)));
      w(i, j) = z;
      w(j, i) = std::conj(z);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-15 * std::max(1.0, w.max_abs());
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (max_offdiag(w) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(w(p, q)) > stop * 1e-2) jacobi_rotate(w, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x,
                                                   std::size_t y) {
    return w(x, x).real() < w(y, y).real();
  });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, j) = v(i, order[j]);
  }
  phase_normalize_columns(out.eigenvectors);
  return out;
}

namespace {

ComplexMatrix assemble_hermitian(const HermitianEigen &eig,
                                 const std::vector<double> &values) {
  const std::size_t n = eig.eigenvalues.size();
  const ComplexMatrix &v = eig.eigenvectors;
  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cdouble s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += values[k] * v(i, k) * std::conj(v(j, k));
      b(i, j) = s;
      b(j, i) = std::conj(s);
    }
    b(i, i) = b(i, i).real();
  }
  return b;
}

} // namespace

ComplexMatrix spectral_map(const ComplexMatrix &a,
                           const std::function<double(double)> &f,
                           double tol) {
  const HermitianEigen eig = hermitian_eig(a, tol);
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    mapped[k] = f(eig.eigenvalues[k]);
    if (!std::isfinite(mapped[k]))
      throw Error(ErrorKind::DomainError,
                  "spectral_map: f undefined at eigenvalue " +
                      std::to_string(eig.eigenvalues[k]));
  }
  return assemble_hermitian(eig, mapped);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a, double rank_tol) {
  const HermitianEigen eig = hermitian_eig(a);
  const double scale = eig.max_abs_eigenvalue();
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lam = eig.eigenvalues[k];
    if (lam < -rank_tol * std::max(1.0, scale))
      throw Error(ErrorKind::NotPSD,
                  "matrix_sqrt_psd: eigenvalue " + std::to_string(lam));
    // Eigenvalue noise around zero would blow up to sqrt-sized artifacts,
    // so zero decisions go through the same rank threshold as everywhere
    // else.
    mapped[k] = lam > rank_tol * scale ? std::sqrt(lam) : 0.0;
  }
  return assemble_hermitian(eig, mapped);
}

ComplexMatrix pseudo_inverse_sqrt(const ComplexMatrix &a, double rank_tol) {
  const HermitianEigen eig = hermitian_eig(a);
  const double scale = eig.max_abs_eigenvalue();
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lam = eig.eigenvalues[k];
    if (lam < -rank_tol * std::max(1.0, scale))
      throw Error(ErrorKind::NotPSD,
                  "pseudo_inverse_sqrt: eigenvalue " + std::to_string(lam));
    mapped[k] = lam > rank_tol * scale ? 1.0 / std::sqrt(lam) : 0.0;
  }
  return assemble_hermitian(eig, mapped);
}

SpectrumReport spectrum_within(const ComplexMatrix &a,
                               const std::vector<double> &inner,
                               double outer_lo, double outer_hi, double tol,
                               double rank_tol) {
  const HermitianEigen eig = hermitian_eig(a);
  const double scale = eig.max_abs_eigenvalue();

  SpectrumReport rep;
  rep.eigenvalues = eig.eigenvalues;
  for (double lam : eig.eigenvalues) {
    if (std::abs(lam) <= rank_tol * scale) continue;
    if (lam < outer_lo - tol || lam > outer_hi + tol)
      rep.outside_range.push_back(lam);
  }
  for (double want : inner) {
    bool hit = false;
    for (double lam : eig.eigenvalues)
      if (std::abs(lam - want) <= tol) {
        hit = true;
        break;
      }
    if (!hit) rep.unattained.push_back(want);
  }
  rep.pass = rep.outside_range.empty() && rep.unattained.empty();
  return rep;
}

} // namespace framedil
