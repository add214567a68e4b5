#pragma once

// Chain algebra on a multigraph: boundary and coboundary, the fundamental
// cycle basis of H_Z, and the orthogonal projection pi: C -> H.

#include <optional>
#include <vector>

#include "crystalvor/chain.hpp"
#include "crystalvor/graph.hpp"
#include "crystalvor/lattice.hpp"

namespace crystalvor {

/// d(e_j) = source(e_j) - target(e_j).
VertexChain boundary(const MultiGraph& g, const Chain& x);

/// delta(v_i) = sum of outgoing edges - sum of incoming edges.
Chain coboundary(const MultiGraph& g, const VertexChain& y);

/// Breadth-first tree from vertex 0, scanning incident edges in index order.
/// Sorted edge indices; loops never appear.
std::vector<EdgeIndex> spanning_tree(const MultiGraph& g);

/// Fundamental cycles gamma_j = e_j + (tree path from target(e_j) to
/// source(e_j)), one for each edge j outside the tree, in edge order.
struct CycleBasis {
  std::size_t edge_count = 0;
  std::vector<EdgeIndex> tree;
  std::vector<EdgeIndex> cotree;
  std::vector<Chain> cycles;
  RationalMatrix gram;
  RationalMatrix gram_inverse;

  std::size_t genus() const { return cycles.size(); }
};

CycleBasis cycle_basis(const MultiGraph& g);

/// The unique directed-by-sign tree walk between two vertices.
Walk tree_walk(const MultiGraph& g, const std::vector<EdgeIndex>& tree, VertexIndex from,
               VertexIndex to);

/// pi(x) = sum_ab gamma_a G^-1_ab (gamma_b, x).
Chain project(const Chain& x, const CycleBasis& b);

/// Coordinates of pi(x) in the cycle basis: G^-1 (gamma_b, x).
RationalVector cycle_coordinates(const Chain& x, const CycleBasis& b);

/// sum_a c_a gamma_a.
Chain from_cycle_coordinates(const RationalVector& c, const CycleBasis& b);

bool in_cycle_space(const MultiGraph& g, const Chain& x);

RationalMatrix gram_of(const std::vector<Chain>& vectors);

/// Rational coordinates of x in the span of a linearly independent family,
/// or nothing when x lies outside the span.
std::optional<RationalVector> span_coordinates(const Chain& x, const std::vector<Chain>& basis);

/// Integer coordinates of x in the Z-span of a linearly independent family.
std::optional<IntegerVector> lattice_coordinates(const Chain& x, const std::vector<Chain>& basis);

/// (gamma_j, pi(e_j')) = delta_jj' over the edges outside the tree.
bool dual_pairing_check(const CycleBasis& b);

/// pi(e_j) for every edge.
std::vector<Chain> projected_edges(const CycleBasis& b);

}  // namespace crystalvor
