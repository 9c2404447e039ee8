#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framedil/dilation.hpp"
#include "framedil/error.hpp"
#include "framedil/json_io.hpp"
#include "test_util.hpp"

using namespace framedil;
using framedil::test::basis_vector;
using framedil::test::random_cvec;

namespace {

Frame one_one_two() {
  Frame f;
  f.dim = 2;
  f.vectors = {basis_vector(2, 0), basis_vector(2, 0), basis_vector(2, 1)};
  return f;
}

} // namespace

TEST_CASE("dilating an orthonormal basis is trivial") {
  Frame basis;
  basis.dim = 2;
  basis.vectors = {basis_vector(2, 0), basis_vector(2, 1)};
  const auto cert = dilate_frame(basis);
  CHECK(distance_max(cert.embedding, ComplexMatrix::identity(2)) < 1e-12);
  CHECK(distance_max(cert.dilation_operator, ComplexMatrix::identity(2)) <
        1e-12);
  CHECK(verify_dilation(basis, cert).pass());
}

TEST_CASE("dilating {e1, e1, e2}") {
  const Frame f = one_one_two();
  const auto cert = dilate_frame(f);

  // E is the square root of the Gramian: the rank-one block scaled by
  // 1/sqrt(2) plus the isolated unit.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix want(3, 3);
  want(0, 0) = want(0, 1) = want(1, 0) = want(1, 1) = s;
  want(2, 2) = 1.0;
  CHECK(distance_max(cert.dilation_operator, want) < 1e-12);

  // nonzero spectrum {1, sqrt(2)} = {sqrt(A^2), sqrt(B^2)}
  CHECK(cert.bounds.lower == doctest::Approx(1.0));
  CHECK(cert.bounds.upper == doctest::Approx(2.0));
  const auto spec = spectrum_within(cert.dilation_operator,
                                    {1.0, std::sqrt(2.0)}, 1.0,
                                    std::sqrt(2.0), 1e-9);
  CHECK(spec.pass);

  const auto report = verify_dilation(f, cert);
  CHECK(report.pass());
}

TEST_CASE("Parseval input collapses E to a projection") {
  const Frame p = canonical_parseval(one_one_two());
  const auto cert = dilate_frame(p);
  const ComplexMatrix &e = cert.dilation_operator;
  CHECK(distance_frobenius(e * e, e) < 1e-9);
  CHECK((e - e.adjoint()).frobenius_norm() < 1e-10);
  CHECK(verify_dilation(p, cert).pass());
}

TEST_CASE("random frames: generated certificates verify") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng.next_u64() % 4;
    const std::size_t n = d + rng.next_u64() % 8;
    Frame f;
    f.dim = d;
    for (std::size_t i = 0; i < n; ++i)
      f.vectors.push_back(random_cvec(d, rng));
    const auto cert = dilate_frame(f);
    const auto report = verify_dilation(f, cert);
    CHECK(report.pass());
    // E^2 is the Gramian
    CHECK(distance_frobenius(cert.dilation_operator * cert.dilation_operator,
                             gramian(f)) < 1e-9);
  }
}

TEST_CASE("E^2 matches the Gramian up to 64 vectors") {
  Rng rng(33);
  Frame f;
  f.dim = 6;
  for (int i = 0; i < 64; ++i) f.vectors.push_back(random_cvec(6, rng));
  const auto cert = dilate_frame(f);
  CHECK(distance_frobenius(cert.dilation_operator * cert.dilation_operator,
                           gramian(f)) < 1e-9);
  CHECK(verify_dilation(f, cert).pass());
}

TEST_CASE("spectral multiset of E^2 is S plus zeros") {
  Rng rng(32);
  Frame f;
  f.dim = 3;
  for (int i = 0; i < 9; ++i) f.vectors.push_back(random_cvec(3, rng));
  const auto cert = dilate_frame(f);
  const auto e2_eig =
      hermitian_eig(cert.dilation_operator * cert.dilation_operator, 1e-8);
  const auto s_eig = hermitian_eig(frame_operator(f));
  for (int k = 0; k < 6; ++k) CHECK(std::abs(e2_eig.eigenvalues[k]) < 1e-9);
  for (int k = 0; k < 3; ++k)
    CHECK(e2_eig.eigenvalues[6 + k] ==
          doctest::Approx(s_eig.eigenvalues[k]).epsilon(1e-9));
}

TEST_CASE("tight frames give a scaled projection") {
  Frame mercedes;
  mercedes.dim = 2;
  const double h = std::sqrt(3.0) / 2.0;
  mercedes.vectors = {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}};
  const auto cert = dilate_frame(mercedes);
  const double a = std::sqrt(1.5);
  const ComplexMatrix p = cdouble(1.0 / a) * cert.dilation_operator;
  CHECK(distance_frobenius(p * p, p) < 1e-9);
}

TEST_CASE("verifier flags a perturbed dilation operator") {
  const Frame f = one_one_two();
  auto cert = dilate_frame(f);
  cert.dilation_operator(0, 1) += 1e-3;
  const auto report = verify_dilation(f, cert);
  CHECK(!report.pass());
  CHECK(!report.find("dilation_columns")->pass);
}

TEST_CASE("verifier flags a zeroed embedding column") {
  const Frame f = one_one_two();
  auto cert = dilate_frame(f);
  for (std::size_t i = 0; i < cert.embedding.rows(); ++i)
    cert.embedding(i, 0) = 0.0;
  const auto report = verify_dilation(f, cert);
  CHECK(!report.pass());
  CHECK(!report.find("embedding_isometry")->pass);
}

TEST_CASE("verifier rejects shape mismatches") {
  const Frame f = one_one_two();
  auto cert = dilate_frame(f);
  Frame other;
  other.dim = 2;
  other.vectors = {basis_vector(2, 0), basis_vector(2, 1)};
  CHECK_THROWS_AS((void)verify_dilation(other, cert), Error);
}

TEST_CASE("dilation certificate JSON round trip") {
  const Frame f = one_one_two();
  const auto cert = dilate_frame(f);
  const auto back = dilation_certificate_from_json(
      parse_json(dump_json(dilation_certificate_to_json(cert))));
  CHECK(distance_max(back.dilation_operator, cert.dilation_operator) == 0.0);
  CHECK(distance_max(back.embedding, cert.embedding) == 0.0);
  CHECK(back.bounds.lower == cert.bounds.lower);
  CHECK(back.tolerance == cert.tolerance);
  CHECK(verify_dilation(f, back).pass());
}
