#pragma once

// Dense exact vectors indexed by edges (1-chains) or vertices (0-chains).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "crystalvor/linalg.hpp"

namespace crystalvor {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

template <class Tag>
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n) : values_(n, 0) {}
  explicit DenseVector(RationalVector values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const RationalVector& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool is_zero() const {
    for (const auto& v : values_)
      if (sgn(v) != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& v : values_)
      if (v.get_den() != 1) return false;
    return true;
  }

  DenseVector& operator+=(const DenseVector& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  DenseVector& operator-=(const DenseVector& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  DenseVector& operator*=(const Rational& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend DenseVector operator+(DenseVector a, const DenseVector& b) { return a += b; }
  friend DenseVector operator-(DenseVector a, const DenseVector& b) { return a -= b; }
  friend DenseVector operator*(const Rational& s, DenseVector a) { return a *= s; }
  friend DenseVector operator-(DenseVector a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }
  friend bool operator==(const DenseVector& a, const DenseVector& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const DenseVector& a, const DenseVector& b) {
    return a.values_ < b.values_;
  }

 private:
  RationalVector values_;
};

struct EdgeTag {};
struct VertexTag {};

/// Element of C_1 = R^J.
using Chain = DenseVector<EdgeTag>;
/// Element of C_0 = R^I.
using VertexChain = DenseVector<VertexTag>;

/// The standard inner product on C_1: (e_j, e_j') = delta_jj'.
inline Rational inner(const Chain& x, const Chain& y) { return dot(x.values(), y.values()); }

inline Chain unit_chain(std::size_t edge_count, EdgeIndex j) {
  Chain c(edge_count);
  c[j] = 1;
  return c;
}

/// e(J') = sum of e_j over the given edges.
inline Chain edge_sum(std::size_t edge_count, std::span<const EdgeIndex> edges) {
  Chain c(edge_count);
  for (auto j : edges) c[j] += 1;
  return c;
}

/// Linear combination sum_a coefficients[a] * vectors[a].
inline Chain combine(std::span<const Chain> vectors, const RationalVector& coefficients,
                     std::size_t edge_count) {
  Chain out(edge_count);
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    if (sgn(coefficients[a]) == 0) continue;
    out += coefficients[a] * vectors[a];
  }
  return out;
}

}  // namespace crystalvor
