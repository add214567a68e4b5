#pragma once

// A lattice-periodic tiling of a subspace by translates of one convex cell,
// and the segment walker that clips a segment against successive cells.

#include <optional>
#include <string>
#include <vector>

#include "crystalvor/chain.hpp"
#include "crystalvor/lattice.hpp"

namespace crystalvor {

struct ReducedPoint {
  IntegerVector h;  // lattice coordinates of the translate
  Chain y;          // x - h, inside the base cell
};

/// One maximal subsegment lying in a single translate h + cell.
struct Piece {
  Rational t0, t1;  // parameters along the original segment
  IntegerVector h;
  Chain y0, y1;  // endpoints moved back into the base cell
  std::vector<std::size_t> tight;  // halfspaces tight at the midpoint
  std::size_t face_dimension = 0;
};

class PeriodicTiling {
 public:
  /// The base cell is { y : (normals[k], y) <= offsets[k] } around `center`;
  /// its translates by the Z-span of `lattice_basis` tile that span.
  PeriodicTiling(std::vector<Chain> lattice_basis, Chain center, std::vector<Chain> normals,
                 std::vector<Rational> offsets);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Chain>& lattice_basis() const { return basis_; }
  const Chain& center() const { return center_; }
  const std::vector<Chain>& normals() const { return normals_; }
  const std::vector<Rational>& offsets() const { return offsets_; }
  const LatticeSearch& search() const { return search_; }

  /// Coordinates in the lattice basis of a point of its span.
  RationalVector coordinates(const Chain& x) const;
  Chain lattice_vector(const IntegerVector& h) const;

  /// All lattice vectors h minimising |x - center - h|, lexicographic order.
  std::vector<IntegerVector> nearest(const Chain& x) const;

  /// Among the nearest translates, the one of smallest norm (then
  /// lexicographically smallest coordinates).
  ReducedPoint reduce(const Chain& x) const;

  bool contains(const Chain& y) const;
  std::vector<std::size_t> tight(const Chain& y) const;
  /// dim - rank of the given normals.
  std::size_t face_dimension(const std::vector<std::size_t>& tight) const;

  /// Clips [a, b] against the translates it meets, in order.
  std::vector<Piece> walk(const Chain& a, const Chain& b) const;

 private:
  std::vector<Chain> basis_;
  Chain center_;
  std::vector<Chain> normals_;
  std::vector<Rational> offsets_;
  LatticeSearch search_;
};

struct Segment {
  Chain a, b;
  std::size_t edge = 0;
};

struct PieceReport {
  Chain a, b;  // absolute endpoints of the clipped piece
  std::size_t edge = 0;
  IntegerVector translate;
  std::optional<std::size_t> witness;  // index of a facet containing the piece
  std::size_t face_dimension = 0;
};

struct VerificationReport {
  bool ok = true;
  std::size_t genus = 0;
  std::string base_vertex;
  std::size_t r = 0;
  std::vector<PieceReport> segments;
};

/// Clips every segment through the tiling and looks for a facet containing
/// each piece. r is the largest face dimension met; ok iff r < dim.
VerificationReport verify_segments(const PeriodicTiling& tiling,
                                   const std::vector<Segment>& segments);

}  // namespace crystalvor
