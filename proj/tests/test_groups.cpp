#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framedil/error.hpp"
#include "framedil/group.hpp"
#include "framedil/json_io.hpp"
#include "test_util.hpp"

using namespace framedil;
using framedil::test::basis_vector;
using framedil::test::random_cvec;

namespace {

Representation z2_sign_rep() {
  Representation rep;
  rep.group = cyclic_group(2);
  rep.dim = 1;
  ComplexMatrix plus(1, 1), minus(1, 1);
  plus(0, 0) = 1.0;
  minus(0, 0) = -1.0;
  rep.matrices = {plus, minus};
  return rep;
}

Representation z4_diag_rep() {
  // powers of diag(1, i) on C^2
  Representation rep;
  rep.group = cyclic_group(4);
  rep.dim = 2;
  for (unsigned k = 0; k < 4; ++k) {
    ComplexMatrix u(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = std::polar(1.0, std::numbers::pi * double(k) / 2.0);
    rep.matrices.push_back(u);
  }
  return rep;
}

} // namespace

TEST_CASE("group constructors") {
  const auto z6 = cyclic_group(6);
  CHECK(z6.order == 6);
  CHECK(z6.mul(4, 5) == 3);
  CHECK(z6.inv(2) == 4);

  const auto d4 = dihedral_group(4);
  CHECK(d4.order == 8);
  // non-abelian: r * s != s * r
  CHECK(d4.mul(1, 4) != d4.mul(4, 1));

  const auto z2xz4 = direct_product(cyclic_group(2), cyclic_group(4));
  CHECK(z2xz4.order == 8);
  CHECK(z2xz4.mul(5, 7) == 0); // (1,1)*(1,3) = (0,0)
  CHECK(z2xz4.mul(5, 6) == 3); // (1,1)*(1,2) = (0,3)
}

TEST_CASE("make_group rejects invalid tables") {
  // not a Latin square
  CHECK_THROWS_AS((void)make_group({{0, 1}, {1, 1}}), Error);
  // identity not at 0
  CHECK_THROWS_AS((void)make_group({{1, 0}, {0, 1}}), Error);
  // Latin square with identity but not associative (order 5 quasigroup)
  CHECK_THROWS_AS((void)make_group({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}}),
                  Error);
}

TEST_CASE("regular representation hand values") {
  const auto z2 = regular_representation(cyclic_group(2));
  ComplexMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  CHECK(distance_max(z2.matrices[1], swap) == 0.0);

  const auto z3 = regular_representation(cyclic_group(3));
  ComplexMatrix shift(3, 3);
  shift(1, 0) = shift(2, 1) = shift(0, 2) = 1.0;
  CHECK(distance_max(z3.matrices[1], shift) == 0.0);
}

TEST_CASE("regular representation is a faithful homomorphism") {
  for (const auto &g :
       {cyclic_group(5), dihedral_group(4), dihedral_group(12),
        direct_product(cyclic_group(2), cyclic_group(4))}) {
    const auto lam = regular_representation(g);
    // table-lookup oracle, exhaustive
    for (unsigned a = 0; a < g.order; ++a)
      for (unsigned b = 0; b < g.order; ++b)
        CHECK(distance_max(lam.matrices[a] * lam.matrices[b],
                           lam.matrices[g.mul(a, b)]) == 0.0);
    CHECK(validate_representation(lam).pass());
  }
}

TEST_CASE("orbit frames") {
  const auto orbit = orbit_frame(z2_sign_rep(), {cdouble(1.0, 0.0)});
  CHECK(orbit.vectors[0][0] == cdouble(1.0, 0.0));
  CHECK(orbit.vectors[1][0] == cdouble(-1.0, 0.0));

  // trivial representation of Z3 on C^1: tight frame with bound 3
  Representation trivial;
  trivial.group = cyclic_group(3);
  trivial.dim = 1;
  trivial.matrices.assign(3, ComplexMatrix::identity(1));
  const auto triple = orbit_frame(trivial, {cdouble(1.0, 0.0)});
  const auto b = frame_bounds(triple);
  CHECK(b.lower == doctest::Approx(3.0));
  CHECK(b.upper == doctest::Approx(3.0));

  // Z4 via powers of diag(1, i): S = 2 I, checked by the energy oracle
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto z4_orbit =
      orbit_frame(z4_diag_rep(), {cdouble(inv_sqrt2), cdouble(inv_sqrt2)});
  CHECK(distance_frobenius(frame_operator(z4_orbit),
                           cdouble(2.0) * ComplexMatrix::identity(2)) <
        1e-15);
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    CVec x = random_cvec(2, rng);
    x = cdouble(1.0 / norm2(x)) * x;
    double energy = 0.0;
    for (const auto &v : z4_orbit.vectors)
      energy += std::norm(inner_product(x, v));
    CHECK(energy == doctest::Approx(2.0).epsilon(1e-10));
  }

  CHECK_THROWS_AS((void)orbit_frame(z4_diag_rep(), {cdouble(1.0)}), Error);
}

TEST_CASE("group dilation of the sign representation") {
  const auto rep = z2_sign_rep();
  const CVec f = {cdouble(1.0, 0.0)};
  const auto cert = dilate_group_frame(rep, f);

  ComplexMatrix gram(2, 2);
  gram(0, 0) = gram(1, 1) = 1.0;
  gram(0, 1) = gram(1, 0) = -1.0;
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(distance_max(cert.base.dilation_operator, cdouble(s) * gram) < 1e-12);
  CHECK(cert.base.bounds.lower == doctest::Approx(2.0));
  CHECK(cert.base.bounds.upper == doctest::Approx(2.0));
  // nonzero spectrum of E is exactly {sqrt(2)}
  const auto spec =
      spectrum_within(cert.base.dilation_operator, {std::sqrt(2.0)},
                      std::sqrt(2.0), std::sqrt(2.0), 1e-9);
  CHECK(spec.pass);
  CHECK(verify_group_dilation(rep, f, cert).pass());
}

TEST_CASE("regular orbit of the identity coordinate dilates trivially") {
  const auto lam = regular_representation(cyclic_group(5));
  const CVec e0 = basis_vector(5, 0);
  const auto cert = dilate_group_frame(lam, e0);
  CHECK(distance_max(cert.base.dilation_operator,
                     ComplexMatrix::identity(5)) < 1e-12);
  CHECK(distance_max(cert.base.embedding, ComplexMatrix::identity(5)) <
        1e-12);
  CHECK(verify_group_dilation(lam, e0, cert).pass());
}

TEST_CASE("group dilation certificates verify across groups") {
  Rng rng(42);
  std::vector<Representation> reps;
  reps.push_back(z4_diag_rep());
  reps.push_back(cyclic_character_rep(7, 2));
  reps.push_back(dihedral_standard_rep(4));
  reps.push_back(z2_x_zn_character_rep(4));
  for (const auto &rep : reps) {
    CHECK(validate_representation(rep).pass());
    for (int trial = 0; trial < 3; ++trial) {
      const CVec f = random_cvec(rep.dim, rng);
      const auto cert = dilate_group_frame(rep, f);
      const auto report = verify_group_dilation(rep, f, cert);
      CHECK(report.pass());
    }
  }
}

TEST_CASE("frame operator commutes with the acting group") {
  Rng rng(43);
  const auto rep = dihedral_standard_rep(4);
  const CVec f = random_cvec(3, rng);
  const auto s = frame_operator(orbit_frame(rep, f));
  for (const auto &u : rep.matrices)
    CHECK(distance_frobenius(s * u, u * s) < 1e-9);
}

TEST_CASE("Parseval frame vectors dilate to a projection") {
  Rng rng(44);
  const auto rep = cyclic_character_rep(6, 3);
  CVec f = random_cvec(3, rng);
  // canonicalize: orbit of S^{-1/2} f is the canonical Parseval frame
  const auto s_inv_half =
      pseudo_inverse_sqrt(frame_operator(orbit_frame(rep, f)));
  const CVec f1 = mat_apply(s_inv_half, f);
  const auto cert = dilate_group_frame(rep, f1);
  const ComplexMatrix &e = cert.base.dilation_operator;
  CHECK(distance_frobenius(e * e, e) < 1e-9);
  CHECK(verify_group_dilation(rep, f1, cert).pass());
}

TEST_CASE("dilate_group_frame refuses unfaithful representations") {
  Representation trivial;
  trivial.group = cyclic_group(3);
  trivial.dim = 1;
  trivial.matrices.assign(3, ComplexMatrix::identity(1));
  CHECK_THROWS_AS((void)dilate_group_frame(trivial, {cdouble(1.0)}), Error);
  try {
    (void)dilate_group_frame(trivial, {cdouble(1.0)});
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotARepresentation);
  }
}

TEST_CASE("verifier flags a certificate built from a fake frame operator") {
  Rng rng(45);
  const auto rep = z4_diag_rep();
  const CVec f = random_cvec(2, rng);
  auto cert = dilate_group_frame(rep, f);

  // Rebuild the embedding from a rank-one perturbed "frame operator" that
  // no longer commutes with the group.
  const auto orbit = orbit_frame(rep, f);
  ComplexMatrix fake_s = frame_operator(orbit);
  CVec spike = {cdouble(1.0, 0.0), cdouble(0.3, 0.4)};
  fake_s += outer_product(spike, spike);
  const auto fake_inv_half = pseudo_inverse_sqrt(fake_s);
  Frame fake_parseval;
  fake_parseval.dim = 2;
  for (const auto &v : orbit.vectors)
    fake_parseval.vectors.push_back(mat_apply(fake_inv_half, v));
  cert.base.embedding = analysis_matrix(fake_parseval);

  const auto report = verify_group_dilation(rep, f, cert);
  CHECK(!report.pass());
  CHECK(!report.find("intertwining")->pass);
}

TEST_CASE("verifier flags permuted regular-representation ordering") {
  Rng rng(46);
  const auto rep = cyclic_character_rep(5, 2);
  const CVec f = random_cvec(2, rng);
  auto cert = dilate_group_frame(rep, f);
  std::swap(cert.regular_rep.matrices[1], cert.regular_rep.matrices[2]);
  const auto report = verify_group_dilation(rep, f, cert);
  CHECK(!report.pass());
  // the permuted lambda no longer maps e_identity to the right coordinate
  CHECK((!report.find("wandering_vector_basis")->pass ||
         !report.find("intertwining")->pass));
}

TEST_CASE("verifier flags permuted orbit ordering") {
  Rng rng(47);
  const auto rep = cyclic_character_rep(5, 2);
  const CVec f = random_cvec(2, rng);
  auto cert = dilate_group_frame(rep, f);
  // swap two rows of the embedding: E e_g = Phi U_g f breaks
  for (std::size_t j = 0; j < cert.base.embedding.cols(); ++j)
    std::swap(cert.base.embedding(1, j), cert.base.embedding(2, j));
  const auto report = verify_group_dilation(rep, f, cert);
  CHECK(!report.pass());
  CHECK(!report.find("dilation_moves_basis_to_orbit")->pass);
}

TEST_CASE("group and representation JSON round trips") {
  const auto d4 = dihedral_group(4);
  const auto back = group_from_json(parse_json(dump_json(group_to_json(d4))));
  CHECK(back.same_table(d4));

  const auto rep = dihedral_standard_rep(3);
  const auto rep_back = representation_from_json(
      parse_json(dump_json(representation_to_json(rep))));
  CHECK(rep_back.dim == rep.dim);
  for (std::size_t g = 0; g < rep.group.order; ++g)
    CHECK(distance_max(rep_back.matrices[g], rep.matrices[g]) == 0.0);

  Rng rng(48);
  const CVec f = random_cvec(3, rng);
  const auto cert = dilate_group_frame(rep, f);
  const auto cert_back = group_certificate_from_json(
      parse_json(dump_json(group_certificate_to_json(cert))));
  CHECK(verify_group_dilation(rep, f, cert_back).pass());
}
