#pragma once

// Integer lattice utilities: Hermite row bases, integer kernels and an exact
// Fincke-Pohst enumeration for closest lattice points.

#include <cstddef>
#include <optional>
#include <vector>

#include "crystalvor/linalg.hpp"

namespace crystalvor {

using IntegerMatrix = std::vector<IntegerVector>;

/// Row-style Hermite normal form basis of the lattice generated by `rows`.
/// Zero rows are dropped; the result is unique for a given lattice.
IntegerMatrix hermite_row_basis(IntegerMatrix rows);

/// Basis of { x in Z^columns : a x = 0 }.
IntegerMatrix integer_kernel(const IntegerMatrix& a, std::size_t columns);

Integer integer_determinant(const IntegerMatrix& a);

/// Lattice points for a positive definite Gram matrix. All queries are in
/// coordinates with respect to the lattice basis.
class LatticeSearch {
 public:
  explicit LatticeSearch(RationalMatrix gram);

  std::size_t dimension() const { return gram_.size(); }
  const RationalMatrix& gram() const { return gram_; }

  /// (h - target)^T G (h - target).
  Rational distance_squared(const IntegerVector& h, const RationalVector& target) const;

  /// Every integer h attaining the minimum distance to `target`, sorted
  /// lexicographically, together with that minimum.
  std::pair<Rational, std::vector<IntegerVector>> closest(const RationalVector& target) const;

  /// Every integer h with distance_squared(h, target) <= radius_squared.
  std::vector<IntegerVector> within(const RationalVector& target,
                                    const Rational& radius_squared) const;

 private:
  template <class Visit>
  void enumerate(const RationalVector& target, Rational& radius, Visit&& visit) const;

  RationalMatrix gram_;
  LdlFactor ldl_;
};

}  // namespace crystalvor
