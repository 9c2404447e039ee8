#include "framedil/gabor.hpp"

#include <cmath>
#include <numbers>

#include "framedil/error.hpp"

namespace framedil {

namespace {

std::vector<cdouble> root_table(std::size_t n) {
  std::vector<cdouble> w(n);
  for (std::size_t k = 0; k < n; ++k)
    w[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
  return w;
}

} // namespace

void validate_gabor_system(const FiniteGaborSystem &sys) {
  if (sys.N == 0)
    throw Error(ErrorKind::InvalidLattice, "signal length must be positive");
  if (sys.a == 0 || sys.N % sys.a != 0)
    throw Error(ErrorKind::InvalidLattice,
                "translation step must divide the signal length");
  if (sys.b == 0 || sys.N % sys.b != 0)
    throw Error(ErrorKind::InvalidLattice,
                "modulation step must divide the signal length");
  if (sys.window.size() != sys.N)
    throw Error(ErrorKind::DimMismatch, "window length != N");
  if (norm2(sys.window) == 0.0)
    throw Error(ErrorKind::InvalidLattice, "window must be nonzero");
}

ComplexMatrix gabor_translation(std::size_t n_dim) {
  ComplexMatrix t(n_dim, n_dim);
  for (std::size_t j = 0; j < n_dim; ++j) t((j + 1) % n_dim, j) = 1.0;
  return t;
}

ComplexMatrix gabor_modulation(std::size_t n_dim) {
  const auto w = root_table(n_dim);
  ComplexMatrix m(n_dim, n_dim);
  for (std::size_t k = 0; k < n_dim; ++k) m(k, k) = w[k];
  return m;
}

ProjectiveRep gabor_representation(const FiniteGaborSystem &sys) {
  validate_gabor_system(sys);
  const std::size_t big_n = sys.N;
  const std::size_t p = big_n / sys.a; // translations
  const std::size_t q = big_n / sys.b; // modulations
  const std::size_t order = p * q;
  const auto w = root_table(big_n);

  // Element j*q + k is the pair (m, n) = (j a, k b).
  auto trans_of = [&](unsigned g) { return (std::size_t(g) / q) * sys.a; };
  auto mod_of = [&](unsigned g) { return (std::size_t(g) % q) * sys.b; };

  std::vector<std::vector<unsigned>> table(order,
                                           std::vector<unsigned>(order));
  for (unsigned g = 0; g < order; ++g)
    for (unsigned h = 0; h < order; ++h) {
      const std::size_t j = (g / q + h / q) % p;
      const std::size_t k = (g % q + h % q) % q;
      table[g][h] = unsigned(j * q + k);
    }

  ProjectiveRep rep;
  rep.group = make_group(std::move(table));
  rep.dim = big_n;

  rep.multiplier.group = rep.group;
  rep.multiplier.values = ComplexMatrix(order, order);
  for (unsigned g = 0; g < order; ++g)
    for (unsigned h = 0; h < order; ++h) {
      // exp(-2 pi i m_g n_h / N) via the shared table, exponent mod N
      const std::size_t idx = (trans_of(g) * mod_of(h)) % big_n;
      rep.multiplier.values(g, h) = std::conj(w[idx]);
    }

  rep.matrices.reserve(order);
  for (unsigned g = 0; g < order; ++g) {
    const std::size_t m = trans_of(g);
    const std::size_t n = mod_of(g);
    // pi(m, n) = M^n T^m: column j has one entry at row (j + m) mod N with
    // phase w^{n (j + m)}.
    ComplexMatrix u(big_n, big_n);
    for (std::size_t j = 0; j < big_n; ++j) {
      const std::size_t row = (j + m) % big_n;
      u(row, j) = w[(n * row) % big_n];
    }
    rep.matrices.push_back(std::move(u));
  }
  return rep;
}

ProjectiveDilationCertificate gabor_dilation(const FiniteGaborSystem &sys,
                                             double rank_tol, double tol) {
  const ProjectiveRep rep = gabor_representation(sys);
  return dilate_projective(rep, sys.window, rank_tol, tol);
}

} // namespace framedil
