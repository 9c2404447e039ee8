#ifndef FRAMEDIL_TEST_UTIL_HPP
#define FRAMEDIL_TEST_UTIL_HPP

#include <vector>

#include "framedil/matrix.hpp"
#include "framedil/rng.hpp"

namespace framedil::test {

inline ComplexMatrix random_hermitian(std::size_t n, Rng &rng) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = rng.complex_normal();
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

/// PSD with rank exactly min(rank, n): W W* for an n x rank Gaussian W.
inline ComplexMatrix random_psd(std::size_t n, std::size_t rank, Rng &rng) {
  ComplexMatrix w(n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j) w(i, j) = rng.complex_normal();
  return w * w.adjoint();
}

inline CVec random_cvec(std::size_t n, Rng &rng) {
  CVec v(n);
  for (auto &z : v) z = rng.complex_normal();
  return v;
}

inline CVec basis_vector(std::size_t n, std::size_t i) {
  CVec v(n, cdouble(0.0, 0.0));
  v[i] = 1.0;
  return v;
}

} // namespace framedil::test

#endif
