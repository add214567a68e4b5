#pragma once

// Bundled example graphs: graphene, diamond, k4 and lonsdaleite.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystalvor/graph.hpp"

namespace crystalvor {

struct Example {
  std::string name;
  MultiGraph graph;
  VertexIndex base = 0;
  /// Vanishing subgroup generators and a chain whose projection to E' is
  /// the cell center (lonsdaleite only).
  std::vector<Chain> vanishing;
  std::optional<Chain> center_chain;
  /// Named chains whose projections form a convenient basis (q1, q2, q3).
  std::vector<std::pair<std::string, Chain>> named_chains;
  /// A quoted basis of pi'(H_Z) in named-chain coordinates, checked against
  /// the computed one rather than trusted.
  std::vector<IntegerVector> quoted_image_cycles;
};

const std::vector<std::string>& example_names();

/// Throws UnknownExample.
Example load_example(std::string_view name);

/// Sum of coefficient * edge over edge ids, e.g. {{"m1", 1}, {"n3", -1}}.
Chain chain_from_ids(const MultiGraph& g, const std::vector<std::pair<std::string, long>>& terms);

}  // namespace crystalvor
