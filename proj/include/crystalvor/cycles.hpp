#pragma once

// Elementary cycles (signed circuits) and strongly connected orientations.

#include <cstddef>
#include <vector>

#include "crystalvor/chain.hpp"
#include "crystalvor/graph.hpp"

namespace crystalvor {

/// A cycle with coefficients in {-1, 0, +1} split into its sign classes.
struct ElementaryCycle {
  Chain chain;
  std::vector<EdgeIndex> plus;
  std::vector<EdgeIndex> zero;
  std::vector<EdgeIndex> minus;

  std::size_t plus_count() const { return plus.size(); }
  /// Edges with nonzero coefficient, sorted.
  std::vector<EdgeIndex> support() const;
  ElementaryCycle negated() const;
};

/// Throws NotACycle when the boundary is nonzero and NotUnit when some
/// coefficient lies outside {-1, 0, +1}.
ElementaryCycle cycle_parts(const MultiGraph& g, const Chain& c);

inline constexpr std::size_t default_cycle_guard = 100000;
inline constexpr std::size_t default_orientation_guard = std::size_t{1} << 24;

/// Every signed circuit once, ordered by support (lexicographic on edge
/// indices) and then with the orientation whose first coefficient is +1
/// ahead of its negation.
std::vector<ElementaryCycle> enumerate_elementary_cycles(const MultiGraph& g,
                                                         std::size_t guard = default_cycle_guard);

/// All sign vectors whose reorientation is strongly connected. Ordered by
/// the bit mask whose bit j is set when edge j is reversed.
std::vector<Orientation> enumerate_strong_orientations(
    const MultiGraph& g, std::size_t guard = default_orientation_guard);

struct L1Vertex {
  ElementaryCycle cycle;
  RationalVector point;  // gamma / |gamma|_1
};

std::vector<L1Vertex> l1_ball_vertices(const MultiGraph& g);

/// Worker count from CRYSTALVOR_THREADS (at least 1).
std::size_t configured_threads();

}  // namespace crystalvor
