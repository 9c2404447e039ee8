#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framedil/error.hpp"
#include "framedil/frame.hpp"
#include "framedil/json_io.hpp"
#include "test_util.hpp"

using namespace framedil;
using framedil::test::basis_vector;
using framedil::test::random_cvec;

namespace {

Frame one_one_two() {
  // {e1, e1, e2} in C^2
  Frame f;
  f.dim = 2;
  f.vectors = {basis_vector(2, 0), basis_vector(2, 0), basis_vector(2, 1)};
  return f;
}

Frame mercedes() {
  Frame f;
  f.dim = 2;
  const double h = std::sqrt(3.0) / 2.0;
  f.vectors = {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}};
  return f;
}

} // namespace

TEST_CASE("analysis matrix conventions") {
  Frame basis;
  basis.dim = 2;
  basis.vectors = {basis_vector(2, 0), basis_vector(2, 1)};
  CHECK(distance_max(analysis_matrix(basis), ComplexMatrix::identity(2)) ==
        0.0);

  const auto t = analysis_matrix(one_one_two());
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t(0, 0) == cdouble(1.0, 0.0));
  CHECK(t(1, 0) == cdouble(1.0, 0.0));
  CHECK(t(2, 1) == cdouble(1.0, 0.0));

  // single vector (i, 0): the row is its conjugate, so <f, f_1> comes out
  // with the convention <x,y> = sum x conj(y)
  Frame single;
  single.dim = 2;
  single.vectors = {{cdouble(0.0, 1.0), cdouble(0.0, 0.0)}};
  const auto row = analysis_matrix(single);
  CHECK(row(0, 0) == cdouble(0.0, -1.0));
  CHECK(row(0, 1) == cdouble(0.0, 0.0));
}

TEST_CASE("synthesis is the adjoint of analysis") {
  Rng rng(21);
  Frame f;
  f.dim = 4;
  for (int i = 0; i < 9; ++i) f.vectors.push_back(random_cvec(4, rng));
  CHECK(distance_max(synthesis_matrix(f), analysis_matrix(f).adjoint()) ==
        0.0);
  // synthesis ∘ analysis = frame operator, as a plain matrix product
  CHECK(distance_frobenius(synthesis_matrix(f) * analysis_matrix(f),
                           frame_operator(f)) < 1e-12);
}

TEST_CASE("frame operator hand values") {
  Frame basis;
  basis.dim = 3;
  basis.vectors = {basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)};
  CHECK(distance_max(frame_operator(basis), ComplexMatrix::identity(3)) ==
        0.0);

  CHECK(distance_max(frame_operator(one_one_two()),
                     ComplexMatrix::diagonal({2.0, 1.0})) == 0.0);

  // Mercedes frame sums to (3/2) I
  CHECK(distance_max(frame_operator(mercedes()),
                     cdouble(1.5) * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("gramian hand values and spectra") {
  const auto g = gramian(one_one_two());
  ComplexMatrix want(3, 3);
  want(0, 0) = want(0, 1) = want(1, 0) = want(1, 1) = want(2, 2) = 1.0;
  CHECK(distance_max(g, want) == 0.0);

  // nonzero eigenvalues of the Gramian match the frame operator's spectrum
  Rng rng(22);
  Frame f;
  f.dim = 3;
  for (int i = 0; i < 7; ++i) f.vectors.push_back(random_cvec(3, rng));
  const auto gram_eig = hermitian_eig(gramian(f));
  const auto s_eig = hermitian_eig(frame_operator(f));
  // top three of the 7 Gramian eigenvalues vs the 3 of S
  for (int k = 0; k < 3; ++k)
    CHECK(gram_eig.eigenvalues[4 + k] ==
          doctest::Approx(s_eig.eigenvalues[k]).epsilon(1e-9));
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(gram_eig.eigenvalues[k]) < 1e-9);
}

TEST_CASE("frame bounds") {
  Frame basis;
  basis.dim = 2;
  basis.vectors = {basis_vector(2, 0), basis_vector(2, 1)};
  const auto b0 = frame_bounds(basis);
  CHECK(b0.lower == doctest::Approx(1.0));
  CHECK(b0.upper == doctest::Approx(1.0));
  CHECK(b0.parseval());

  const auto b1 = frame_bounds(one_one_two());
  CHECK(b1.lower == doctest::Approx(1.0));
  CHECK(b1.upper == doctest::Approx(2.0));
  CHECK(!b1.tight());

  const auto b2 = frame_bounds(mercedes());
  CHECK(b2.lower == doctest::Approx(1.5));
  CHECK(b2.upper == doctest::Approx(1.5));
  CHECK(b2.tight());
  CHECK(!b2.parseval());
}

TEST_CASE("frame_bounds rejects non-frames") {
  Frame f;
  f.dim = 2;
  f.vectors = {basis_vector(2, 0), basis_vector(2, 0)};
  CHECK_THROWS_AS((void)frame_bounds(f), Error);
  try {
    (void)frame_bounds(f);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotAFrame);
  }
}

TEST_CASE("energy bounds hold on random unit vectors") {
  Rng rng(23);
  Frame f;
  f.dim = 3;
  for (int i = 0; i < 8; ++i) f.vectors.push_back(random_cvec(3, rng));
  const auto b = frame_bounds(f);
  for (int trial = 0; trial < 100; ++trial) {
    CVec x = random_cvec(3, rng);
    const double nx = norm2(x);
    x = cdouble(1.0 / nx) * x;
    double energy = 0.0;
    for (const auto &v : f.vectors) energy += std::norm(inner_product(x, v));
    CHECK(energy >= b.lower - 1e-9);
    CHECK(energy <= b.upper + 1e-9);
  }
}

TEST_CASE("canonical Parseval frame") {
  // diagonal case by hand
  const auto p = canonical_parseval(one_one_two());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(p.vectors[0][0] - cdouble(s)) < 1e-12);
  CHECK(std::abs(p.vectors[1][0] - cdouble(s)) < 1e-12);
  CHECK(std::abs(p.vectors[2][1] - cdouble(1.0)) < 1e-12);

  // a Parseval frame is a fixed point (within 1e-12)
  const auto p2 = canonical_parseval(p);
  for (std::size_t i = 0; i < p.count(); ++i)
    CHECK(norm2(p2.vectors[i] - p.vectors[i]) < 1e-12);

  // random case: the output's frame operator is the identity
  Rng rng(24);
  Frame f;
  f.dim = 5;
  for (int i = 0; i < 12; ++i) f.vectors.push_back(random_cvec(5, rng));
  const auto q = canonical_parseval(f);
  CHECK(distance_frobenius(frame_operator(q), ComplexMatrix::identity(5)) <
        1e-9);
  // idempotent within 1e-9
  const auto q2 = canonical_parseval(q);
  for (std::size_t i = 0; i < q.count(); ++i)
    CHECK(norm2(q2.vectors[i] - q.vectors[i]) < 1e-9);
}

TEST_CASE("frame JSON round trip") {
  Rng rng(25);
  Frame f;
  f.dim = 3;
  for (int i = 0; i < 5; ++i) f.vectors.push_back(random_cvec(3, rng));
  const Frame g = frame_from_json(parse_json(dump_json(frame_to_json(f))));
  CHECK(g.dim == f.dim);
  REQUIRE(g.count() == f.count());
  for (std::size_t i = 0; i < f.count(); ++i)
    CHECK(norm2(g.vectors[i] - f.vectors[i]) == 0.0);
}

TEST_CASE("frame JSON rejects garbage") {
  CHECK_THROWS_AS((void)parse_json("{not json"), Error);
  CHECK_THROWS_AS((void)frame_from_json(parse_json("{\"dim\": 2}")), Error);
  CHECK_THROWS_AS(
      (void)frame_from_json(parse_json(
          "{\"dim\": 2, \"vectors\": [[[1,0]]]}")), // wrong vector length
      Error);
}
