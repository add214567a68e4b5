#pragma once

// Segment lists of pi(Crystal) inside the cell for the bundled examples,
// written as sequences of projected edges from 0.

#include <set>
#include <string>
#include <vector>

#include "crystalvor/examples.hpp"
#include "crystalvor/homology.hpp"
#include "crystalvor/tiling.hpp"

namespace listed {

using namespace crystalvor;

/// [sum of first k edges, sum of first k+1 edges] for a prefix path.
using Path = std::vector<std::string>;

inline std::set<std::set<Chain>> segments_from(const MultiGraph& g, const CycleBasis& b,
                                               const std::vector<std::pair<Path, std::string>>& items) {
  std::set<std::set<Chain>> out;
  for (const auto& [prefix, step] : items) {
    Chain a(g.edge_count());
    for (const auto& id : prefix) a += project(chain_from_ids(g, {{id, 1}}), b);
    Chain c = a + project(chain_from_ids(g, {{step, 1}}), b);
    out.insert({a, c});
  }
  return out;
}

inline std::set<std::set<Chain>> graphene(const MultiGraph& g, const CycleBasis& b) {
  return segments_from(g, b, {{{}, "e1"}, {{"e1"}, "e3"}, {{"e1", "e3"}, "e2"},
                              {{}, "e2"}, {{"e2"}, "e3"}, {{"e2", "e3"}, "e1"}});
}

inline std::set<std::set<Chain>> diamond(const MultiGraph& g, const CycleBasis& b) {
  std::vector<std::pair<Path, std::string>> items;
  for (const std::string i : {"e1", "e2", "e3"}) {
    items.push_back({{}, i});
    items.push_back({{i}, "e4"});
    for (const std::string k : {"e1", "e2", "e3"})
      if (k != i) items.push_back({{i, "e4"}, k});
  }
  return segments_from(g, b, items);
}

inline std::set<std::set<Chain>> k4(const MultiGraph& g, const CycleBasis& b) {
  return segments_from(g, b, {{{}, "e3"},
                              {{"e3"}, "e1"},
                              {{"e3", "e1"}, "f3"},
                              {{"e3", "e1", "f3"}, "f1"},
                              {{"e3", "e1", "f3", "f1"}, "f2"},
                              {{"e3"}, "e2"},
                              {{"e3", "e2"}, "f1"},
                              {{"e3", "e2", "f1"}, "f2"},
                              {{"e3", "e2", "f1", "f2"}, "f3"},
                              {{}, "f2"},
                              {{"f2"}, "f3"},
                              {{"f2", "f3"}, "f1"},
                              {{"f2", "f3", "f1"}, "e3"},
                              {{"f2", "f3", "f1", "e3"}, "e1"},
                              {{"f2", "f3", "f1", "e3"}, "e2"}});
}

inline std::set<std::set<Chain>> as_set(const std::vector<Segment>& segments) {
  std::set<std::set<Chain>> out;
  for (const auto& s : segments) out.insert({s.a, s.b});
  return out;
}

}  // namespace listed
