#include "framedil/projective.hpp"

#include <cmath>
#include <string>

#include "framedil/error.hpp"

namespace framedil {

Report validate_multiplier(const MultiplierTable &m, double tol) {
  Report out;
  const std::size_t n = m.group.order;
  if (m.values.rows() != n || m.values.cols() != n) {
    out.add_flag("multiplier_shape", false, "values table size != |G|^2");
    return out;
  }

  double unimod = 0.0;
  for (unsigned g = 0; g < n; ++g)
    for (unsigned h = 0; h < n; ++h)
      unimod = std::max(unimod, std::abs(std::abs(m.mu(g, h)) - 1.0));
  out.add("multiplier_unimodular", unimod, tol);

  double norm_res = 0.0;
  for (unsigned g = 0; g < n; ++g) {
    norm_res = std::max(norm_res, std::abs(m.mu(g, 0) - cdouble(1.0)));
    norm_res = std::max(norm_res, std::abs(m.mu(0, g) - cdouble(1.0)));
  }
  out.add("multiplier_normalized", norm_res, tol);

  double cocycle = 0.0;
  std::string detail;
  int listed = 0;
  for (unsigned g1 = 0; g1 < n; ++g1)
    for (unsigned g2 = 0; g2 < n; ++g2)
      for (unsigned g3 = 0; g3 < n; ++g3) {
        const cdouble lhs = m.mu(g1, m.group.mul(g2, g3)) * m.mu(g2, g3);
        const cdouble rhs = m.mu(m.group.mul(g1, g2), g3) * m.mu(g1, g2);
        const double res = std::abs(lhs - rhs);
        if (res > tol && listed < 10) {
          detail += "(" + std::to_string(g1) + "," + std::to_string(g2) +
                    "," + std::to_string(g3) + ") ";
          ++listed;
        }
        cocycle = std::max(cocycle, res);
      }
  out.add("multiplier_cocycle", cocycle, tol, detail);
  return out;
}

MultiplierTable trivial_multiplier(const FiniteGroup &g) {
  MultiplierTable m;
  m.group = g;
  m.values = ComplexMatrix(g.order, g.order);
  for (unsigned a = 0; a < g.order; ++a)
    for (unsigned b = 0; b < g.order; ++b) m.values(a, b) = 1.0;
  return m;
}

MultiplierTable pauli_multiplier() {
  MultiplierTable m;
  m.group = direct_product(cyclic_group(2), cyclic_group(2));
  m.values = ComplexMatrix(4, 4);
  for (unsigned g = 0; g < 4; ++g)
    for (unsigned h = 0; h < 4; ++h) {
      const unsigned b_g = g % 2;
      const unsigned a_h = h / 2;
      m.values(g, h) = (b_g * a_h) % 2 == 0 ? 1.0 : -1.0;
    }
  return m;
}

Report validate_projective_rep(const ProjectiveRep &rep, double tol_unitary,
                               double tol_rel) {
  Report out = validate_multiplier(rep.multiplier);
  out.add_flag("multiplier_group_matches",
               rep.multiplier.group.same_table(rep.group));
  if (rep.matrices.size() != rep.group.order) {
    out.add_flag("projective_rep_count", false,
                 "matrix count != group order");
    return out;
  }
  const ComplexMatrix id = ComplexMatrix::identity(rep.dim);
  double unit_res = 0.0;
  for (const auto &u : rep.matrices) {
    if (u.rows() != rep.dim || u.cols() != rep.dim) {
      out.add_flag("projective_rep_shapes", false);
      return out;
    }
    unit_res =
        std::max(unit_res, distance_frobenius(u.adjoint() * u, id));
  }
  out.add("projective_rep_unitary", unit_res, tol_unitary);

  double rel_res = 0.0;
  for (unsigned g = 0; g < rep.group.order; ++g)
    for (unsigned h = 0; h < rep.group.order; ++h)
      rel_res = std::max(
          rel_res,
          distance_frobenius(
              rep.matrices[g] * rep.matrices[h],
              rep.multiplier.mu(g, h) *
                  rep.matrices[rep.group.mul(g, h)]));
  out.add("projective_rep_relation", rel_res, tol_rel);
  return out;
}

ProjectiveRep projective_regular_representation(const MultiplierTable &m) {
  const Report valid = validate_multiplier(m);
  if (!valid.pass())
    throw Error(ErrorKind::InvalidMultiplier, valid.failing_names().front());
  ProjectiveRep rep;
  rep.group = m.group;
  rep.multiplier = m;
  rep.dim = m.group.order;
  rep.matrices.reserve(m.group.order);
  for (unsigned g = 0; g < m.group.order; ++g) {
    ComplexMatrix lam(m.group.order, m.group.order);
    for (unsigned h = 0; h < m.group.order; ++h)
      lam(m.group.mul(g, h), h) = m.mu(g, h);
    rep.matrices.push_back(std::move(lam));
  }
  return rep;
}

ProjectiveRep pauli_projective_rep() {
  ProjectiveRep rep;
  rep.multiplier = pauli_multiplier();
  rep.group = rep.multiplier.group;
  rep.dim = 2;
  ComplexMatrix x(2, 2), z(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b) {
      ComplexMatrix u = ComplexMatrix::identity(2);
      for (unsigned k = 0; k < a; ++k) u = x * u;
      ComplexMatrix zb = ComplexMatrix::identity(2);
      for (unsigned k = 0; k < b; ++k) zb = z * zb;
      rep.matrices.push_back(u * zb);
    }
  return rep;
}

ProjectiveRep as_projective(const Representation &rep) {
  ProjectiveRep out;
  out.group = rep.group;
  out.multiplier = trivial_multiplier(rep.group);
  out.dim = rep.dim;
  out.matrices = rep.matrices;
  return out;
}

ProjectiveDilationCertificate dilate_projective(const ProjectiveRep &rep,
                                                const CVec &f,
                                                double rank_tol, double tol) {
  {
    const Report valid = validate_projective_rep(rep);
    if (!valid.pass()) {
      const std::string what = valid.failing_names().front();
      if (what.rfind("multiplier", 0) == 0)
        throw Error(ErrorKind::InvalidMultiplier, what);
      throw Error(ErrorKind::NotAProjectiveRep, what);
    }
  }
  if (f.size() != rep.dim)
    throw Error(ErrorKind::DimMismatch, "vector length != rep dim");

  const std::size_t n = rep.group.order;
  const std::size_t d = rep.dim;

  Frame orbit;
  orbit.dim = d;
  for (const auto &u : rep.matrices) orbit.vectors.push_back(mat_apply(u, f));

  ProjectiveDilationCertificate cert;
  cert.tolerance = tol;
  cert.bounds = frame_bounds(orbit, rank_tol); // NotAFrame when singular

  const ComplexMatrix s = frame_operator(orbit);
  const ComplexMatrix s_inv_half = pseudo_inverse_sqrt(s, rank_tol);
  cert.frame_operator_sqrt = matrix_sqrt_psd(s, rank_tol);
  cert.canonical_vector = mat_apply(s_inv_half, f);

  // Phi = analysis operator of the canonical Parseval orbit {pi(g) f1}.
  Frame parseval_orbit;
  parseval_orbit.dim = d;
  for (const auto &u : rep.matrices)
    parseval_orbit.vectors.push_back(mat_apply(u, cert.canonical_vector));
  cert.embedding = analysis_matrix(parseval_orbit);
  cert.projection = cert.embedding * cert.embedding.adjoint();

  // pi'(g) = (I - P) lambda_g; lambda_g only permutes and phases columns of
  // I - P, so build it by column gather.
  ComplexMatrix i_minus_p =
      ComplexMatrix::identity(n) - cert.projection;
  cert.complement_rep.group = rep.group;
  cert.complement_rep.multiplier = rep.multiplier;
  cert.complement_rep.dim = n;
  cert.complement_rep.matrices.reserve(n);
  for (unsigned g = 0; g < n; ++g) {
    ComplexMatrix pi_prime(n, n);
    for (unsigned h = 0; h < n; ++h) {
      const unsigned gh = rep.group.mul(g, h);
      const cdouble phase = rep.multiplier.mu(g, h);
      for (std::size_t i = 0; i < n; ++i)
        pi_prime(i, h) = phase * i_minus_p(i, gh);
    }
    cert.complement_rep.matrices.push_back(std::move(pi_prime));
  }

  cert.complement_vector = i_minus_p.column(0);
  return cert;
}

Report verify_projective_dilation(const ProjectiveRep &rep, const CVec &f,
                                  const ProjectiveDilationCertificate &cert) {
  Report out = validate_projective_rep(rep);

  const std::size_t n = rep.group.order;
  const std::size_t d = rep.dim;
  const double tol = cert.tolerance;
  const double attain_tol = 100.0 * tol;

  const ComplexMatrix &phi = cert.embedding;
  const ComplexMatrix &p = cert.projection;
  const ComplexMatrix &e = cert.frame_operator_sqrt;
  const ProjectiveRep &pi_prime = cert.complement_rep;

  if (phi.rows() != n || phi.cols() != d || p.rows() != n || p.cols() != n ||
      e.rows() != d || e.cols() != d || cert.canonical_vector.size() != d ||
      cert.complement_vector.size() != n || pi_prime.matrices.size() != n)
    throw Error(ErrorKind::ShapeMismatch,
                "certificate shapes do not match the representation");

  // The complement must carry the *same* multiplier over the same group.
  out.add_flag("complement_group_matches",
               pi_prime.group.same_table(rep.group));
  out.add("complement_multiplier_matches",
          distance_max(pi_prime.multiplier.values, rep.multiplier.values),
          tol);

  // Independent recomputation of S from rep and f.
  Frame orbit;
  orbit.dim = d;
  for (const auto &u : rep.matrices) orbit.vectors.push_back(mat_apply(u, f));
  FrameBounds bounds;
  bool is_frame = true;
  try {
    bounds = frame_bounds(orbit);
  } catch (const Error &) {
    is_frame = false;
  }
  out.add_flag("frame_property", is_frame);
  if (!is_frame) return out;

  const ComplexMatrix s = frame_operator(orbit);
  out.add("frame_operator_sqrt", distance_frobenius(e * e, s), tol);
  out.add("bounds_lower", std::abs(bounds.lower - cert.bounds.lower),
          tol * std::max(1.0, bounds.upper));
  out.add("bounds_upper", std::abs(bounds.upper - cert.bounds.upper),
          tol * std::max(1.0, bounds.upper));

  // E(pi(g) f1) = pi(g) f for every g; g = identity pins f1 itself.
  double canon = 0.0;
  for (unsigned g = 0; g < n; ++g) {
    const CVec lhs =
        mat_apply(e, mat_apply(rep.matrices[g], cert.canonical_vector));
    canon = std::max(canon, norm2(lhs - orbit.vectors[g]));
  }
  out.add("canonical_vector_relation", canon, tol);

  // sigma(E) inside [A, B], endpoints attained.
  {
    const SpectrumReport contain = spectrum_within(
        e, {}, bounds.sqrt_lower(), bounds.sqrt_upper(), tol);
    double outside = 0.0;
    for (double lam : contain.outside_range)
      outside = std::max(outside, std::max(bounds.sqrt_lower() - lam,
                                           lam - bounds.sqrt_upper()));
    out.add("spectrum_containment", outside, tol);
    const SpectrumReport attain = spectrum_within(
        e, {bounds.sqrt_lower(), bounds.sqrt_upper()}, bounds.sqrt_lower(),
        bounds.sqrt_upper(), attain_tol);
    out.add_flag("spectrum_endpoints_attained", attain.unattained.empty());
  }

  // Embedding is the analysis isometry of the canonical orbit.
  out.add("embedding_isometry",
          distance_frobenius(phi.adjoint() * phi,
                             ComplexMatrix::identity(d)),
          tol);
  out.add("projection_consistent",
          distance_frobenius(p, phi * phi.adjoint()), tol);
  out.add("projection_idempotent", distance_frobenius(p * p, p), tol);
  out.add("projection_hermitian", (p - p.adjoint()).frobenius_norm(), tol);

  double pe_res = 0.0;
  for (unsigned g = 0; g < n; ++g)
    pe_res = std::max(
        pe_res,
        norm2(p.column(g) -
              mat_apply(phi, mat_apply(rep.matrices[g], cert.canonical_vector))));
  out.add("projection_moves_basis_to_orbit", pe_res, tol);

  // lambda_g P = P lambda_g for the verifier's own regular representation.
  const ProjectiveRep lambda =
      projective_regular_representation(rep.multiplier);
  double commute = 0.0;
  for (unsigned g = 0; g < n; ++g)
    commute = std::max(commute, distance_frobenius(lambda.matrices[g] * p,
                                                   p * lambda.matrices[g]));
  out.add("projection_commutes_with_lambda", commute, tol);

  // pi' is unitary on K and kills the embedded copy of H.
  const ComplexMatrix i_minus_p = ComplexMatrix::identity(n) - p;
  double unitary_on_k = 0.0;
  for (unsigned g = 0; g < n; ++g)
    unitary_on_k = std::max(
        unitary_on_k,
        distance_frobenius(
            pi_prime.matrices[g].adjoint() * pi_prime.matrices[g],
            i_minus_p));
  out.add("complement_unitary_on_k", unitary_on_k, tol);

  // pi'(g) pi'(h) = mu(g,h) pi'(gh) as full matrices.
  double rel = 0.0;
  for (unsigned g = 0; g < n; ++g)
    for (unsigned h = 0; h < n; ++h)
      rel = std::max(
          rel, distance_frobenius(
                   pi_prime.matrices[g] * pi_prime.matrices[h],
                   rep.multiplier.mu(g, h) *
                       pi_prime.matrices[rep.group.mul(g, h)]));
  out.add("complement_multiplier_relation", rel, tol);

  // {pi'(g) f2} is a Parseval frame for K = range(I - P).
  ComplexMatrix k_frame_op(n, n);
  std::vector<CVec> complement_orbit(n);
  for (unsigned g = 0; g < n; ++g) {
    complement_orbit[g] =
        mat_apply(pi_prime.matrices[g], cert.complement_vector);
    k_frame_op += outer_product(complement_orbit[g], complement_orbit[g]);
  }
  out.add("complement_orbit_parseval_on_k",
          distance_frobenius(k_frame_op, i_minus_p), tol);

  // Gramian of {pi(g) f1 (+) pi'(g) f2} is the identity: the direct sums
  // form an orthonormal basis of H (+) K.
  ComplexMatrix gram(n, n);
  std::vector<CVec> canonical_orbit(n);
  for (unsigned g = 0; g < n; ++g)
    canonical_orbit[g] = mat_apply(rep.matrices[g], cert.canonical_vector);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      gram(i, j) = inner_product(canonical_orbit[j], canonical_orbit[i]) +
                   inner_product(complement_orbit[j], complement_orbit[i]);
  out.add("direct_sum_orbit_orthonormal",
          distance_frobenius(gram, ComplexMatrix::identity(n)), tol);

  // e_g = P e_g + (I-P) e_g componentwise.
  double decomp = 0.0;
  for (unsigned g = 0; g < n; ++g) {
    CVec v = p.column(g) + i_minus_p.column(g);
    v[g] -= 1.0;
    decomp = std::max(decomp, norm2(v));
  }
  out.add("basis_decomposition", decomp, tol);

  return out;
}

} // namespace framedil
