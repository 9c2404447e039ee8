#include "framedil/group.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "framedil/error.hpp"
#include "framedil/rng.hpp"

namespace framedil {

namespace {

void check_associativity(const FiniteGroup &g) {
  const std::size_t n = g.order;
  if (n <= 64) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(ErrorKind::InvalidGroup,
                        "associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    return;
  }
  Rng rng(0x5eedu);
  for (int trial = 0; trial < 200000; ++trial) {
    const unsigned a = unsigned(rng.next_u64() % n);
    const unsigned b = unsigned(rng.next_u64() % n);
    const unsigned c = unsigned(rng.next_u64() % n);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw Error(ErrorKind::InvalidGroup, "associativity fails");
  }
}

} // namespace

FiniteGroup make_group(std::vector<std::vector<unsigned>> table) {
  FiniteGroup g;
  g.order = table.size();
  if (g.order == 0) throw Error(ErrorKind::InvalidGroup, "empty table");
  for (const auto &row : table)
    if (row.size() != g.order)
      throw Error(ErrorKind::InvalidGroup, "table is not square");
  for (const auto &row : table)
    for (unsigned v : row)
      if (v >= g.order)
        throw Error(ErrorKind::InvalidGroup, "table entry out of range");
  g.table = std::move(table);

  for (unsigned h = 0; h < g.order; ++h)
    if (g.mul(0, h) != h || g.mul(h, 0) != h)
      throw Error(ErrorKind::InvalidGroup, "element 0 is not the identity");

  // Latin square: every row and column is a permutation.
  for (unsigned a = 0; a < g.order; ++a) {
    std::vector<bool> seen_row(g.order, false), seen_col(g.order, false);
    for (unsigned b = 0; b < g.order; ++b) {
      if (seen_row[g.mul(a, b)] || seen_col[g.mul(b, a)])
        throw Error(ErrorKind::InvalidGroup, "table is not a Latin square");
      seen_row[g.mul(a, b)] = true;
      seen_col[g.mul(b, a)] = true;
    }
  }

  check_associativity(g);

  g.inverses.resize(g.order);
  for (unsigned a = 0; a < g.order; ++a) {
    unsigned inv = 0;
    bool found = false;
    for (unsigned b = 0; b < g.order; ++b)
      if (g.mul(a, b) == 0) {
        inv = b;
        found = true;
        break;
      }
    if (!found || g.mul(inv, a) != 0)
      throw Error(ErrorKind::InvalidGroup, "element without two-sided inverse");
    g.inverses[a] = inv;
  }
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "cyclic_group(0)");
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make_group(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "dihedral_group(0)");
  const std::size_t m = 2 * n;
  // Element j*n + i represents r^i s^j; s r s = r^{-1}.
  auto idx = [n](unsigned i, unsigned j) { return unsigned(j * n + i); };
  std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
  for (unsigned j1 = 0; j1 < 2; ++j1)
    for (unsigned i1 = 0; i1 < n; ++i1)
      for (unsigned j2 = 0; j2 < 2; ++j2)
        for (unsigned i2 = 0; i2 < n; ++i2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
          const unsigned i =
              j1 == 0 ? (i1 + i2) % n : unsigned((i1 + n - i2 % n) % n);
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
        }
  return make_group(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t m = a.order * b.order;
  auto idx = [&](unsigned x, unsigned y) {
    return unsigned(x * b.order + y);
  };
  std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
  for (unsigned x1 = 0; x1 < a.order; ++x1)
    for (unsigned y1 = 0; y1 < b.order; ++y1)
      for (unsigned x2 = 0; x2 < a.order; ++x2)
        for (unsigned y2 = 0; y2 < b.order; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  return make_group(std::move(t));
}

Report validate_representation(const Representation &rep, double tol_unitary,
                               double tol_hom, double sep) {
  Report out;
  if (rep.matrices.size() != rep.group.order) {
    out.add_flag("representation_count", false, "matrix count != group order");
    return out;
  }
  const ComplexMatrix id = ComplexMatrix::identity(rep.dim);
  double unit_res = 0.0;
  bool shapes_ok = true;
  for (const auto &u : rep.matrices) {
    if (u.rows() != rep.dim || u.cols() != rep.dim) {
      shapes_ok = false;
      break;
    }
    unit_res = std::max(unit_res,
                        distance_frobenius(u.adjoint() * u, id));
  }
  out.add_flag("representation_shapes", shapes_ok);
  if (!shapes_ok) return out;
  out.add("representation_unitary", unit_res, tol_unitary);

  double hom_res = 0.0;
  for (unsigned g = 0; g < rep.group.order; ++g)
    for (unsigned h = 0; h < rep.group.order; ++h)
      hom_res = std::max(
          hom_res, distance_frobenius(rep.matrices[g] * rep.matrices[h],
                                      rep.matrices[rep.group.mul(g, h)]));
  out.add("representation_homomorphism", hom_res, tol_hom);

  double min_sep = rep.group.order > 1 ? 1e300 : 1.0;
  for (unsigned g = 0; g < rep.group.order; ++g)
    for (unsigned h = g + 1; h < rep.group.order; ++h)
      min_sep = std::min(min_sep,
                         distance_max(rep.matrices[g], rep.matrices[h]));
  out.add_flag("representation_faithful", min_sep > sep,
               "min pairwise distance " + std::to_string(min_sep));
  return out;
}

Representation regular_representation(const FiniteGroup &g) {
  Representation rep;
  rep.group = g;
  rep.dim = g.order;
  rep.matrices.reserve(g.order);
  for (unsigned a = 0; a < g.order; ++a) {
    ComplexMatrix m(g.order, g.order);
    for (unsigned h = 0; h < g.order; ++h) m(g.mul(a, h), h) = 1.0;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

Frame orbit_frame(const Representation &rep, const CVec &f) {
  if (f.size() != rep.dim)
    throw Error(ErrorKind::DimMismatch, "orbit vector length != rep dim");
  Frame out;
  out.dim = rep.dim;
  out.vectors.reserve(rep.group.order);
  for (const auto &u : rep.matrices) out.vectors.push_back(mat_apply(u, f));
  return out;
}

GroupDilationCertificate dilate_group_frame(const Representation &rep,
                                            const CVec &f, double rank_tol,
                                            double tol) {
  const Report valid = validate_representation(rep);
  if (!valid.pass())
    throw Error(ErrorKind::NotARepresentation,
                valid.failing_names().front());
  const Frame orbit = orbit_frame(rep, f);
  GroupDilationCertificate cert;
  cert.base = dilate_frame(orbit, rank_tol, tol); // NotAFrame when singular
  cert.regular_rep = regular_representation(rep.group);
  return cert;
}

Report verify_group_dilation(const Representation &rep, const CVec &f,
                             const GroupDilationCertificate &cert) {
  Report out = validate_representation(rep);
  const Frame orbit = orbit_frame(rep, f);
  out.merge(verify_dilation(orbit, cert.base));

  const double tol = cert.base.tolerance;
  const std::size_t n = rep.group.order;
  const ComplexMatrix &phi = cert.base.embedding;
  const ComplexMatrix &e = cert.base.dilation_operator;
  const Representation &lam = cert.regular_rep;

  out.add_flag("regular_rep_group_matches",
               lam.group.same_table(rep.group) && lam.dim == n &&
                   lam.matrices.size() == n);
  if (!out.pass() && lam.matrices.size() != n) return out;

  // {lambda_g e_identity} must be the standard basis, in element order.
  double wander = 0.0;
  for (unsigned g = 0; g < n; ++g) {
    CVec e_id(n, cdouble(0.0, 0.0));
    e_id[0] = 1.0;
    CVec got = mat_apply(lam.matrices[g], e_id);
    got[g] -= 1.0;
    wander = std::max(wander, norm2(got));
  }
  out.add("wandering_vector_basis", wander, tol);

  // S commutes with the whole group (the precondition of the construction).
  const ComplexMatrix s = frame_operator(orbit);
  double commute = 0.0;
  for (const auto &u : rep.matrices)
    commute = std::max(commute, distance_frobenius(s * u, u * s));
  out.add("frame_operator_commutes", commute, tol);

  double intertwine = 0.0;
  for (unsigned g = 0; g < n; ++g)
    intertwine = std::max(
        intertwine,
        distance_frobenius(phi.adjoint() * (lam.matrices[g] * phi),
                           rep.matrices[g]));
  out.add("intertwining", intertwine, tol);

  double columns = 0.0;
  for (unsigned g = 0; g < n; ++g)
    columns = std::max(
        columns, norm2(e.column(g) - mat_apply(phi, mat_apply(rep.matrices[g], f))));
  out.add("dilation_moves_basis_to_orbit", columns, tol);

  // sigma(E^2) = sigma(S) plus n - d zeros, as multisets.
  const HermitianEigen e_eig =
      hermitian_eig(e, std::numeric_limits<double>::infinity());
  const HermitianEigen s_eig = hermitian_eig(s);
  std::vector<double> lhs;
  for (double lam_e : e_eig.eigenvalues) lhs.push_back(lam_e * lam_e);
  std::vector<double> rhs(n - rep.dim, 0.0);
  rhs.insert(rhs.end(), s_eig.eigenvalues.begin(), s_eig.eigenvalues.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  double multiset = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    multiset = std::max(multiset, std::abs(lhs[k] - rhs[k]));
  out.add("spectral_multiset_s_plus_zeros", multiset, tol);

  return out;
}

namespace {

cdouble unit_phase(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

} // namespace

Representation cyclic_character_rep(std::size_t n, std::size_t dim) {
  if (dim == 0 || dim > n)
    throw Error(ErrorKind::DimMismatch,
                "cyclic_character_rep needs 1 <= dim <= n");
  Representation rep;
  rep.group = cyclic_group(n);
  rep.dim = dim;
  for (unsigned k = 0; k < n; ++k) {
    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      u(j, j) = unit_phase(double((k * ((j + 1) % n)) % n) / double(n));
    rep.matrices.push_back(std::move(u));
  }
  return rep;
}

Representation dihedral_standard_rep(std::size_t n) {
  Representation rep;
  rep.group = dihedral_group(n);
  rep.dim = 3;
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < n; ++i) {
      const double ang = 2.0 * std::numbers::pi * double(i) / double(n);
      ComplexMatrix u(3, 3);
      if (j == 0) {
        u(0, 0) = std::cos(ang);
        u(0, 1) = -std::sin(ang);
        u(1, 0) = std::sin(ang);
        u(1, 1) = std::cos(ang);
        u(2, 2) = 1.0;
      } else {
        // r^i s acts as rotation followed by the flip diag(1,-1)
        u(0, 0) = std::cos(ang);
        u(0, 1) = std::sin(ang);
        u(1, 0) = std::sin(ang);
        u(1, 1) = -std::cos(ang);
        u(2, 2) = -1.0;
      }
      rep.matrices.push_back(std::move(u));
    }
  return rep;
}

Representation z2_x_zn_character_rep(std::size_t n) {
  if (n < 2)
    throw Error(ErrorKind::InvalidGroup, "z2_x_zn_character_rep needs n >= 2");
  Representation rep;
  rep.group = direct_product(cyclic_group(2), cyclic_group(n));
  rep.dim = 3;
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < n; ++b) {
      ComplexMatrix u(3, 3);
      const double sign = a == 0 ? 0.0 : 0.5;
      u(0, 0) = unit_phase(sign);
      u(1, 1) = unit_phase(double(b) / double(n));
      u(2, 2) = unit_phase(sign + double(b) / double(n));
      rep.matrices.push_back(std::move(u));
    }
  return rep;
}

} // namespace framedil
