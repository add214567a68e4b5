#pragma once

// Finite connected multigraphs with oriented edges, walks on them, and the
// combinatorial operations that only need the incidence structure.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystalvor/chain.hpp"

namespace crystalvor {

struct Edge {
  std::string id;
  VertexIndex source = 0;
  VertexIndex target = 0;

  bool is_loop() const { return source == target; }
};

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string target;
};

/// Gamma = ({v_i}, {e_j}). Loops and parallel edges are allowed; the
/// underlying undirected graph is connected. Vertex and edge order is the
/// input order and is what every index in the library refers to.
class MultiGraph {
 public:
  /// Validates labels, endpoints and connectivity.
  static MultiGraph create(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  /// Labels "v0".."v{n-1}" and "e1".."e{m}".
  static MultiGraph from_pairs(std::size_t vertex_count,
                               const std::vector<std::pair<VertexIndex, VertexIndex>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// dim H_1 = |J| - |I| + 1.
  std::size_t genus() const { return edges_.size() + 1 - vertices_.size(); }

  const std::string& vertex_label(VertexIndex v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Edge& edge(EdgeIndex j) const { return edges_[j]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view label) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  VertexIndex vertex_or_throw(std::string_view label) const;

  /// Edges touching v in index order (a loop is listed once).
  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incidence_[v]; }

  /// Endpoint of edge j opposite to v (v itself for a loop).
  VertexIndex other_end(EdgeIndex j, VertexIndex v) const {
    return edges_[j].source == v ? edges_[j].target : edges_[j].source;
  }

 private:
  MultiGraph() = default;
  void build_incidence();

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// sign +1 keeps the stored direction of an edge, -1 reverses it.
struct Orientation {
  std::vector<int> signs;

  static Orientation stored(const MultiGraph& g) { return {std::vector<int>(g.edge_count(), 1)}; }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Same vertices and edge ids with every edge of sign -1 reversed.
MultiGraph reorient(const MultiGraph& g, const Orientation& o);

struct Step {
  EdgeIndex edge = 0;
  int sign = 1;
  friend bool operator==(const Step&, const Step&) = default;
};

/// A finite sequence of signed edges chained head to tail.
struct Walk {
  VertexIndex start = 0;
  std::vector<Step> steps;

  /// Throws Malformed when consecutive steps do not chain.
  VertexIndex end(const MultiGraph& g) const;
  std::vector<VertexIndex> vertices(const MultiGraph& g) const;
  bool is_valid(const MultiGraph& g) const;
  bool is_directed() const;
  bool is_trail() const;
  bool is_path(const MultiGraph& g) const;
  bool is_circuit(const MultiGraph& g) const;
  /// lambda(w) = sum of signed edges.
  Chain lambda(const MultiGraph& g) const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Edges whose removal disconnects the graph. Loops are never bridges.
std::vector<EdgeIndex> find_bridges(const MultiGraph& g);

bool is_strongly_connected(const MultiGraph& g, const Orientation& o);

/// Robbins orientation. The stored orientation is returned unchanged when it
/// is already strongly connected; otherwise a depth-first search from vertex
/// 0 in index order directs tree edges away from the root and the remaining
/// edges towards the ancestor. Throws BridgeExists.
Orientation strongly_connected_orientation(const MultiGraph& g);

/// Contracts every bridge. Surviving vertices keep the label of the smallest
/// vertex in their class.
MultiGraph collapse_bridges(const MultiGraph& g);

enum class WitnessKind { TwoCircuits, ThreePaths };

/// The subgraph Gamma_1 (two directed circuits meeting only at v_star) or
/// Gamma_2 (p1: v_star_star -> v_star, p2 and p3: v_star -> v_star_star,
/// disjoint except at their ends).
struct BaseVertexChoice {
  WitnessKind kind = WitnessKind::TwoCircuits;
  VertexIndex v_star = 0;
  VertexIndex v_star_star = 0;  // only meaningful for ThreePaths
  std::vector<Walk> circuits;   // TwoCircuits: both circuits start at v_star
  Walk p1, p2, p3;              // ThreePaths
};

/// Builds the witness by following the case analysis for one vertex, two
/// vertices and the general case. Requires the stored orientation to be
/// strongly connected; throws GenusTooSmall when the genus is below 2.
BaseVertexChoice choose_base_vertex(const MultiGraph& g);

/// Checks directions, endpoints and disjointness of a witness.
bool verify_base_vertex_choice(const MultiGraph& g, const BaseVertexChoice& choice);

struct CanonicalDivisors {
  std::vector<long> k_plus;   // outgoing valency - 1
  std::vector<long> k_minus;  // incoming valency - 1
  std::vector<long> k;        // valency - 2
  long degree_plus() const;
  long degree_minus() const;
  long degree() const;
};

CanonicalDivisors canonical_divisors(const MultiGraph& g);

/// Vertex sets of the connected components after deleting `removed` edges.
std::size_t component_count(const MultiGraph& g, const std::vector<bool>& removed);

}  // namespace crystalvor

namespace crystalvor {

/// Reads the graph-file JSON format:
/// {"vertices":["v0",...],"edges":[{"id":"e1","source":"v0","target":"v1"},...]}
MultiGraph parse_graph(std::string_view text);

std::string graph_to_json(const MultiGraph& g);

}  // namespace crystalvor
