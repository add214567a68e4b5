#pragma once

// Free abelian coverings that are not maximal: a vanishing subgroup L of
// H_Z, the complement E' of L in H, the projection pi' onto E' and the
// lattices Lambda & E' in pi'(H_Z) in pi'(Lambda).

#include <optional>
#include <vector>

#include "crystalvor/crystal.hpp"

namespace crystalvor {

struct Subspace {
  std::vector<Chain> generators;  // of L
  std::vector<Chain> basis;       // of E'
  RationalMatrix gram;
  RationalMatrix gram_inverse;

  std::size_t dimension() const { return basis.size(); }
};

/// Generators must be integer cycles. Throws NotInH otherwise.
Subspace complement(const CycleBasis& b, const std::vector<Chain>& generators);

/// Generators given by integer coordinates in the cycle basis.
std::vector<Chain> generators_from_coordinates(const CycleBasis& b,
                                               const std::vector<IntegerVector>& coordinates);

Chain project_prime(const Chain& x, const Subspace& s);

struct LatticeTriple {
  std::vector<Chain> intersection;  // Lambda & E'
  std::vector<Chain> image_cycles;  // pi'(H_Z)
  std::vector<Chain> image_chains;  // pi'(Lambda)
  RationalMatrix gram_intersection, gram_image_cycles, gram_image_chains;
  Integer index_lower = 1;  // [pi'(H_Z) : Lambda & E']
  Integer index_upper = 1;  // [pi'(Lambda) : pi'(H_Z)]
  bool dual = false;        // pairing of the outer two is unimodular
};

/// Basis of the lattice generated by vectors of a subspace, reduced to
/// Hermite form in the coordinates of the subspace basis.
std::vector<Chain> image_lattice_basis(const std::vector<Chain>& generators, const Subspace& s);

LatticeTriple lattice_triple(const CycleBasis& b, const Subspace& s);

/// Offsets and edge vectors pushed through pi', periodic under pi'(H_Z).
CrystalModel projected_crystal(const MultiGraph& g, const CycleBasis& b, VertexIndex v0,
                               const Subspace& s, const LatticeTriple& t);

/// Voronoi cell of center + Z-span(basis) around center.
struct LatticeCell {
  Chain center;
  std::vector<Chain> lattice_basis;
  std::vector<Chain> relevant;     // facet normals v, in +-pairs
  std::vector<Rational> offsets;   // (x, v) <= (center, v) + (v, v)/2
  std::vector<Chain> vertices;
};

inline constexpr std::size_t max_lattice_cell_rank = 4;

/// Relevant vectors by Voronoi's criterion: v is relevant iff +-v are the
/// only shortest vectors of the coset v + 2M. Throws RankTooHigh above the
/// rank guard.
LatticeCell lattice_voronoi_cell(const std::vector<Chain>& lattice_basis, const Chain& center);

PeriodicTiling lattice_cell_tiling(const LatticeCell& cell);

/// Volume of the cell in the coordinates of its lattice basis.
Rational lattice_cell_volume(const LatticeCell& cell);

struct ConjectureInput {
  std::vector<Chain> generators;
  std::optional<Chain> center;  // default pi'(e(J)/2)
  VertexIndex base = 0;
};

/// Clips pi'(Crystal) against Vor(E', center + pi'(H_Z)).
VerificationReport verify_conjecture_instance(const MultiGraph& g, const ConjectureInput& input);

struct Bijectivity {
  bool bijective = false;
  std::size_t vertex_orbits = 0, edge_orbits = 0;
  std::size_t vertices = 0, edges = 0;
};

Bijectivity quotient_bijectivity(const MultiGraph& g, const std::vector<Chain>& generators);

/// Diagnostic: the centers among half-lattice points of pi'(Lambda), one per
/// class modulo pi'(H_Z), for which the instance check passes.
std::vector<Chain> search_centers(const MultiGraph& g, const std::vector<Chain>& generators,
                                  VertexIndex base);

}  // namespace crystalvor
