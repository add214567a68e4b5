#pragma once

// The Voronoi cell pi(D_J) of H_Z centred at pi(e(J)/2), as an exact
// zonotope with both halfspace and vertex descriptions.

#include <span>
#include <vector>

#include "crystalvor/cycles.hpp"
#include "crystalvor/homology.hpp"
#include "crystalvor/tiling.hpp"

namespace crystalvor {

/// (x, gamma) <= |gamma+|.
struct HalfSpace {
  ElementaryCycle normal;
  long offset = 0;
};

/// pi(e(Q)) with Q the edges kept by a strongly connected orientation.
struct CellVertex {
  Chain point;
  std::vector<EdgeIndex> q_set;
  Orientation orientation;
};

struct VoronoiCell {
  std::vector<HalfSpace> halfspaces;
  std::vector<CellVertex> vertices;
  Chain center;
  CycleBasis basis;
  std::size_t dim = 0;
};

std::vector<HalfSpace> cell_halfspaces(const MultiGraph& g);

/// One vertex per strong orientation, each checked against every halfspace
/// with at least dim tight normals.
std::vector<CellVertex> cell_vertices(const MultiGraph& g, const CycleBasis& basis,
                                      const std::vector<HalfSpace>& halfspaces,
                                      std::size_t orientation_guard = default_orientation_guard);

VoronoiCell build_cell(const MultiGraph& g,
                       std::size_t orientation_guard = default_orientation_guard);

/// The same cell from its own halfspaces as a periodic tiling by H_Z.
PeriodicTiling cell_tiling(const VoronoiCell& cell);

/// sum_j max((u, e_j), 0); throws NotInH when u is not a cycle.
Rational support_function(const MultiGraph& g, const Chain& u);

/// h minimises |x - center - h|; ties go to the smallest |h| and then the
/// lexicographically smallest coordinates.
ReducedPoint reduce_point(const VoronoiCell& cell, const Chain& x);

/// Indices of the tight halfspaces; throws NotInCell for outside points.
std::vector<std::size_t> tight_halfspaces(const VoronoiCell& cell, const Chain& y);
std::vector<HalfSpace> facets_containing(const VoronoiCell& cell, const Chain& y);

/// Dimension of the smallest face containing all the points.
std::size_t face_dimension(const VoronoiCell& cell, std::span<const Chain> points);

/// Volume in cycle-basis coordinates by a pulling triangulation.
Rational coordinate_volume(const VoronoiCell& cell);

/// Volume of a full-dimensional polytope from its vertices and the
/// halfspace-vertex incidences.
Rational polytope_volume(std::vector<RationalVector> points,
                         std::vector<std::vector<bool>> incidence, std::size_t dim);

}  // namespace crystalvor
