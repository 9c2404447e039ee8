#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "framedil/error.hpp"
#include "framedil/gabor.hpp"
#include "framedil/json_io.hpp"
#include "test_util.hpp"

using namespace framedil;
using framedil::test::basis_vector;
using framedil::test::random_cvec;

namespace {

ComplexMatrix matrix_power(const ComplexMatrix &a, std::size_t k) {
  ComplexMatrix out = ComplexMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = a * out;
  return out;
}

} // namespace

TEST_CASE("generators and multiplier for N = 2") {
  FiniteGaborSystem sys;
  sys.N = 2;
  sys.a = sys.b = 1;
  sys.window = basis_vector(2, 0);
  const auto rep = gabor_representation(sys);
  CHECK(rep.group.order == 4);

  ComplexMatrix t_want(2, 2), m_want(2, 2);
  t_want(0, 1) = t_want(1, 0) = 1.0;
  m_want(0, 0) = 1.0;
  m_want(1, 1) = -1.0;
  // element indexing: (m, n) -> m*(N/b) + n, so (1,0) is 2 and (0,1) is 1
  CHECK(distance_max(rep.matrices[2], t_want) < 1e-15);
  CHECK(distance_max(rep.matrices[1], m_want) < 1e-15);
  CHECK(distance_max(rep.matrices[3], m_want * t_want) < 1e-15);
  CHECK(distance_max(rep.matrices[0], ComplexMatrix::identity(2)) == 0.0);
  CHECK(std::abs(rep.multiplier.mu(2, 1) - cdouble(-1.0)) < 1e-15);
}

TEST_CASE("cocycle equations hold exactly for all divisor lattices") {
  for (std::size_t n_len = 2; n_len <= 8; ++n_len)
    for (std::size_t a = 1; a <= n_len; ++a) {
      if (n_len % a != 0) continue;
      for (std::size_t b = 1; b <= n_len; ++b) {
        if (n_len % b != 0) continue;
        FiniteGaborSystem sys;
        sys.N = n_len;
        sys.a = a;
        sys.b = b;
        sys.window = basis_vector(n_len, 0);
        const auto rep = gabor_representation(sys);
        const auto report = validate_multiplier(rep.multiplier);
        CHECK(report.pass());
        CHECK(report.max_residual() < 1e-12);
        CHECK(validate_projective_rep(rep).pass());
      }
    }
}

TEST_CASE("time-frequency commutation relation") {
  const std::size_t n_len = 6;
  const auto t = gabor_translation(n_len);
  const auto m = gabor_modulation(n_len);
  for (std::size_t mm = 0; mm < n_len; ++mm)
    for (std::size_t nn = 0; nn < n_len; ++nn) {
      const auto lhs = matrix_power(t, mm) * matrix_power(m, nn);
      const cdouble phase =
          std::polar(1.0, -2.0 * std::numbers::pi * double(mm * nn) /
                              double(n_len));
      const auto rhs = phase * (matrix_power(m, nn) * matrix_power(t, mm));
      CHECK(distance_max(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("lattice validation") {
  FiniteGaborSystem sys;
  sys.N = 6;
  sys.a = 4; // does not divide 6
  sys.b = 1;
  sys.window = basis_vector(6, 0);
  CHECK_THROWS_AS((void)gabor_representation(sys), Error);
  try {
    (void)gabor_representation(sys);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidLattice);
  }
}

TEST_CASE("spike window on the full lattice of length 2") {
  FiniteGaborSystem sys;
  sys.N = 2;
  sys.a = sys.b = 1;
  sys.window = basis_vector(2, 0);
  const auto cert = gabor_dilation(sys);
  CHECK(cert.bounds.lower == doctest::Approx(2.0));
  CHECK(cert.bounds.upper == doctest::Approx(2.0));
  CHECK(distance_max(cert.frame_operator_sqrt,
                     cdouble(std::sqrt(2.0)) * ComplexMatrix::identity(2)) <
        1e-12);
  CHECK(verify_projective_dilation(gabor_representation(sys), sys.window,
                                   cert)
            .pass());
}

TEST_CASE("box window on the full lattice of length 4") {
  FiniteGaborSystem sys;
  sys.N = 4;
  sys.a = sys.b = 1;
  const double s = 1.0 / std::sqrt(2.0);
  sys.window = {cdouble(s), cdouble(s), cdouble(0.0), cdouble(0.0)};

  // orbit-summation oracle: S = sum pi(g) w w* pi(g)*
  const auto rep = gabor_representation(sys);
  ComplexMatrix s_sum(4, 4);
  for (const auto &u : rep.matrices) {
    const CVec v = mat_apply(u, sys.window);
    s_sum += outer_product(v, v);
  }
  CHECK(distance_frobenius(s_sum, cdouble(4.0) * ComplexMatrix::identity(4)) <
        1e-12);

  const auto cert = gabor_dilation(sys);
  CHECK(cert.bounds.lower == doctest::Approx(4.0));
  CHECK(cert.bounds.upper == doctest::Approx(4.0));
  CHECK(verify_projective_dilation(rep, sys.window, cert).pass());
}

TEST_CASE("subsampled lattice with a non-tight window") {
  FiniteGaborSystem sys;
  sys.N = 4;
  sys.a = 2;
  sys.b = 1;
  const double norm = std::sqrt(1.25);
  sys.window = {cdouble(1.0 / norm), cdouble(0.5 / norm), cdouble(0.0),
                cdouble(0.0)};
  const auto cert = gabor_dilation(sys);
  CHECK(cert.bounds.lower < cert.bounds.upper - 1e-6);
  CHECK(verify_projective_dilation(gabor_representation(sys), sys.window,
                                   cert)
            .pass());
}

TEST_CASE("full-lattice systems are tight with bound N |w|^2") {
  Rng rng(61);
  for (std::size_t n_len : {2, 3, 5, 6}) {
    FiniteGaborSystem sys;
    sys.N = n_len;
    sys.a = sys.b = 1;
    sys.window = random_cvec(n_len, rng); // deliberately unnormalized
    const auto rep = gabor_representation(sys);
    const auto b = frame_bounds(orbit_frame(
        Representation{rep.group, rep.dim, rep.matrices}, sys.window));
    const double energy = norm2(sys.window) * norm2(sys.window);
    CHECK(std::abs(b.lower - double(n_len) * energy) < 1e-9);
    CHECK(std::abs(b.upper - double(n_len) * energy) < 1e-9);
  }
}

TEST_CASE("undersampled lattices cannot frame the signal space") {
  FiniteGaborSystem sys;
  sys.N = 4;
  sys.a = 4;
  sys.b = 4;
  sys.window = basis_vector(4, 0);
  CHECK_THROWS_AS((void)gabor_dilation(sys), Error);
  try {
    (void)gabor_dilation(sys);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotAFrame);
  }
}

TEST_CASE("gabor JSON round trip") {
  FiniteGaborSystem sys;
  sys.N = 6;
  sys.a = 2;
  sys.b = 3;
  Rng rng(62);
  sys.window = random_cvec(6, rng);
  const auto back = gabor_from_json(parse_json(dump_json(gabor_to_json(sys))));
  CHECK(back.N == sys.N);
  CHECK(back.a == sys.a);
  CHECK(back.b == sys.b);
  CHECK(norm2(back.window - sys.window) == 0.0);
}
