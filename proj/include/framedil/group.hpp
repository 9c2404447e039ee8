#ifndef FRAMEDIL_GROUP_HPP
#define FRAMEDIL_GROUP_HPP

#include <cstddef>
#include <vector>

#include "framedil/dilation.hpp"
#include "framedil/frame.hpp"
#include "framedil/report.hpp"

namespace framedil {

/// Finite group as a multiplication table over labels 0..order-1, with
/// element 0 the identity. Orbit orderings, Gramians and certificates all
/// follow this element indexing, which keeps output files reproducible.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::vector<unsigned>> table; // table[g][h] = g*h
  std::vector<unsigned> inverses;

  unsigned mul(unsigned g, unsigned h) const { return table[g][h]; }
  unsigned inv(unsigned g) const { return inverses[g]; }
  bool same_table(const FiniteGroup &o) const {
    return order == o.order && table == o.table;
  }
};

/// Validates the table (identity at 0, Latin square, associativity — checked
/// exhaustively up to order 64, by random triples above) and derives
/// inverses. Throws InvalidGroup.
FiniteGroup make_group(std::vector<std::vector<unsigned>> table);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n); // order 2n; rotations first
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);

/// Genuine unitary representation: one matrix per group element.
struct Representation {
  FiniteGroup group;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> matrices;
};

/// Unitarity, homomorphism and faithfulness checks. The faithfulness check
/// matters because the whole construction treats the group as a group *of
/// operators*.
Report validate_representation(const Representation &rep,
                               double tol_unitary = 1e-10,
                               double tol_hom = kDefaultTol,
                               double sep = kDefaultRankTol);

/// Left regular representation: permutation matrices with lambda_g e_h =
/// e_{gh} on the order-|G| coordinate space.
Representation regular_representation(const FiniteGroup &g);

/// Orbit {U_g f} ordered by element index.
Frame orbit_frame(const Representation &rep, const CVec &f);

/// DilationCertificate plus the regular representation realizing the
/// orthonormal basis {lambda_g e_identity}; Phi intertwines lambda with the
/// original representation and E e_g = Phi(U_g f).
struct GroupDilationCertificate {
  DilationCertificate base;
  Representation regular_rep;
};

GroupDilationCertificate dilate_group_frame(const Representation &rep,
                                            const CVec &f,
                                            double rank_tol = kDefaultRankTol,
                                            double tol = kDefaultTol);

Report verify_group_dilation(const Representation &rep, const CVec &f,
                             const GroupDilationCertificate &cert);

// Unitary representation builders used by `gen group` and the test corpus.

/// Z_n acting diagonally by the characters k -> w^{jk}, j = 1..dim (dim <=
/// n). Faithful; orbits of vectors with all components nonzero are frames,
/// generically non-tight.
Representation cyclic_character_rep(std::size_t n, std::size_t dim);

/// Dihedral group of order 2n on C^3: standard 2-d action plus the
/// determinant character.
Representation dihedral_standard_rep(std::size_t n);

/// Z_2 x Z_n on C^3 via three distinct characters.
Representation z2_x_zn_character_rep(std::size_t n);

} // namespace framedil

#endif
