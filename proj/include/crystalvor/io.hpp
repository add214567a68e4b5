#pragma once

// JSON, Wavefront OBJ and CSV output, and atomic file writes.

#include <string>
#include <vector>

#include "json.hpp"

#include "crystalvor/cell.hpp"
#include "crystalvor/crystal.hpp"
#include "crystalvor/subcover.hpp"

namespace crystalvor {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Every edge, in edge order.
Json dense_chain_json(const MultiGraph& g, const Chain& c);
/// Nonzero coefficients only.
Json sparse_chain_json(const MultiGraph& g, const Chain& c);
/// Accepts either form; missing edges are zero.
Chain chain_from_json(const MultiGraph& g, const Json& j);

Json integer_vector_json(const IntegerVector& v);
Json graph_json(const MultiGraph& g);
MultiGraph graph_from_json(const Json& j);
Json cycle_json(const MultiGraph& g, const ElementaryCycle& c);
Json orientation_json(const MultiGraph& g, const Orientation& o);
Json walk_json(const MultiGraph& g, const Walk& w);
Json basis_json(const MultiGraph& g, const CycleBasis& b);
Json matrix_json(const RationalMatrix& m);

Json cell_json(const MultiGraph& g, const VoronoiCell& cell);

struct ParsedCell {
  MultiGraph graph;
  VoronoiCell cell;
};
/// Inverse of cell_json; the cycle basis is rebuilt from the graph and
/// checked against the stored one.
ParsedCell cell_from_json(const Json& j);

bool same_cell(const VoronoiCell& a, const VoronoiCell& b);

Json segment_json(const MultiGraph& g, const Segment& s);
Json report_json(const MultiGraph& g, const PeriodicTiling& tiling, const VerificationReport& r);
Json lattice_cell_json(const MultiGraph& g, const LatticeCell& cell);

/// Orthogonal (not yet normalised) frame of a subspace; coordinates are
/// normalised with one square root per axis when printed.
struct Frame {
  std::vector<Chain> axes;
};
Frame orthogonal_frame(const std::vector<Chain>& basis);
std::vector<double> frame_coordinates(const Frame& f, const Chain& x);

/// Triangulated boundary of a 2- or 3-dimensional polytope plus polylines.
std::string polytope_obj(const Frame& f, const std::vector<Chain>& vertices,
                         const std::vector<Chain>& normals, const std::vector<Rational>& offsets,
                         const std::vector<Segment>& segments);
std::string segments_obj(const Frame& f, const std::vector<Segment>& segments);
std::string segments_csv(const MultiGraph& g, const Frame& f, const std::vector<Segment>& segments);

std::string dump(const Json& j);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace crystalvor
