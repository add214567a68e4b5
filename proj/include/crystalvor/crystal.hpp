#pragma once

// The standard realization of the maximal abelian cover and the check that
// it lies in the codimension-one skeleton of the Voronoi tiling.

#include <optional>
#include <utility>
#include <vector>

#include "crystalvor/cell.hpp"

namespace crystalvor {

/// Finite description of a periodic realization: vertex v sits at
/// offsets[v] + period, edge j runs from its source by edge_vectors[j].
struct CrystalModel {
  VertexIndex base = 0;
  std::vector<Chain> offsets;
  std::vector<Chain> edge_vectors;
  std::vector<Chain> period;
};

/// b_v = pi(lambda(p_v)) for breadth-first tree walks p_v from v0.
CrystalModel standard_realization(const MultiGraph& g, VertexIndex v0);
CrystalModel standard_realization(const MultiGraph& g, const CycleBasis& basis, VertexIndex v0);

/// A directed path with the same end as w whose lambda differs from
/// lambda(w) by a cycle. Needs a strongly connected stored orientation.
Walk walk_to_directed_path(const MultiGraph& g, const Walk& w);

inline constexpr std::size_t default_trail_guard = 1000000;

/// Directed trails from v0, shortest first and lexicographic by edge index
/// within a length. The empty trail comes first.
std::vector<Walk> enumerate_directed_trails(const MultiGraph& g, VertexIndex v0,
                                            std::size_t guard = default_trail_guard);

/// Distinct segments of pi(pc(w)) over all directed trails from v0, in the
/// order they are first met. Throws NotInCell if one leaves the cell.
std::vector<Segment> crystal_in_cell(const MultiGraph& g, const VoronoiCell& cell, VertexIndex v0,
                                     std::size_t guard = default_trail_guard);

enum class OrientMode { Stored, Auto };

/// The graph prepared for verification: bridges collapsed, edges strongly
/// oriented, base vertex chosen and the cell built.
struct HiddenTilingSetup {
  MultiGraph graph;
  Orientation orientation;  // relative to the collapsed input
  BaseVertexChoice choice;
  VertexIndex base = 0;
  VoronoiCell cell;
  CrystalModel model;
};

struct PipelineOptions {
  OrientMode orient = OrientMode::Auto;
  std::optional<std::string> base_vertex;
  std::size_t orientation_guard = default_orientation_guard;
};

HiddenTilingSetup prepare_hidden_tiling(const MultiGraph& g, const PipelineOptions& options = {});

/// One segment per edge orbit: [b_source, b_source + pi(e_j)].
std::vector<Segment> fundamental_segments(const CrystalModel& model, const MultiGraph& g);

VerificationReport verify_hidden_tiling(const MultiGraph& g, const PipelineOptions& options = {});

struct QuotientCounts {
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;
  bool matches_collapsed = false;
};

/// Orbits of crystal vertices and non-degenerate segments under the period
/// lattice, compared with the collapsed graph.
QuotientCounts quotient_check(const MultiGraph& g);

/// Orbit counts of a realization under the Z-span of its period vectors.
std::pair<std::size_t, std::size_t> orbit_counts(const CrystalModel& model, const MultiGraph& g);

/// Translates of the fundamental segments by period vectors with
/// coordinates in the given inclusive ranges.
std::vector<Segment> window(const CrystalModel& model, const MultiGraph& g,
                            const std::vector<std::pair<long, long>>& box);

}  // namespace crystalvor
