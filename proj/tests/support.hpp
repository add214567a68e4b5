#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "crystalvor/error.hpp"
#include "crystalvor/examples.hpp"
#include "crystalvor/homology.hpp"

namespace support {

using namespace crystalvor;

/// Kind of the Error thrown by f; fails the test when nothing is thrown.
template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

inline Rational q(const char* text) { return parse_rational(text); }

inline Chain chain(const MultiGraph& g, std::vector<std::pair<std::string, long>> terms) {
  return chain_from_ids(g, terms);
}

/// pi of a chain given by edge ids.
inline Chain bar(const MultiGraph& g, const CycleBasis& b, std::vector<std::pair<std::string, long>> terms) {
  return project(chain_from_ids(g, terms), b);
}

inline MultiGraph graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return MultiGraph::create(std::move(vertices), std::move(edges));
}

inline MultiGraph circle(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return MultiGraph::from_pairs(n, e);
}

/// Segments as unordered endpoint pairs.
inline std::set<std::set<Chain>> unordered(const std::vector<std::pair<Chain, Chain>>& segments) {
  std::set<std::set<Chain>> out;
  for (const auto& [a, b] : segments) out.insert({a, b});
  return out;
}

/// Spans generate the same lattice: each basis has integer coordinates in
/// the other.
inline bool same_lattice(const std::vector<Chain>& a, const std::vector<Chain>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a)
    if (!lattice_coordinates(v, b)) return false;
  for (const auto& v : b)
    if (!lattice_coordinates(v, a)) return false;
  return true;
}

}  // namespace support
