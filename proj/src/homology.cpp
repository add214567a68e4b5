#include "crystalvor/homology.hpp"

#include <algorithm>
#include <deque>

#include "crystalvor/error.hpp"

namespace crystalvor {

VertexChain boundary(const MultiGraph& g, const Chain& x) {
  VertexChain out(g.vertex_count());
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    out[e.source] += x[j];
    out[e.target] -= x[j];
  }
  return out;
}

Chain coboundary(const MultiGraph& g, const VertexChain& y) {
  Chain out(g.edge_count());
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    out[j] = y[e.source] - y[e.target];
  }
  return out;
}

namespace {

struct TreeParents {
  std::vector<std::optional<EdgeIndex>> via;
  std::vector<std::size_t> depth;
};

TreeParents tree_parents(const MultiGraph& g, const std::vector<EdgeIndex>& tree) {
  std::vector<bool> in_tree(g.edge_count(), false);
  for (auto j : tree) in_tree[j] = true;
  TreeParents t{std::vector<std::optional<EdgeIndex>>(g.vertex_count()),
                std::vector<std::size_t>(g.vertex_count(), 0)};
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex j : g.incident(v)) {
      if (!in_tree[j]) continue;
      const VertexIndex w = g.other_end(j, v);
      if (seen[w]) continue;
      seen[w] = true;
      t.via[w] = j;
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::Malformed, "edge set does not span the graph");
  return t;
}

}  // namespace

std::vector<EdgeIndex> spanning_tree(const MultiGraph& g) {
  std::vector<EdgeIndex> tree;
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex j : g.incident(v)) {
      const VertexIndex w = g.other_end(j, v);
      if (seen[w]) continue;
      seen[w] = true;
      tree.push_back(j);
      queue.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Walk tree_walk(const MultiGraph& g, const std::vector<EdgeIndex>& tree, VertexIndex from,
               VertexIndex to) {
  const TreeParents t = tree_parents(g, tree);
  std::vector<Step> up, down;
  VertexIndex a = from, b = to;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      const EdgeIndex j = *t.via[a];
      up.push_back({j, g.edge(j).source == a ? 1 : -1});
      a = g.other_end(j, a);
    } else {
      const EdgeIndex j = *t.via[b];
      const VertexIndex parent = g.other_end(j, b);
      down.push_back({j, g.edge(j).source == parent ? 1 : -1});
      b = parent;
    }
  }
  Walk w{from, std::move(up)};
  w.steps.insert(w.steps.end(), down.rbegin(), down.rend());
  return w;
}

CycleBasis cycle_basis(const MultiGraph& g) {
  CycleBasis b;
  b.edge_count = g.edge_count();
  b.tree = spanning_tree(g);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (auto j : b.tree) in_tree[j] = true;
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    if (in_tree[j]) continue;
    b.cotree.push_back(j);
    Chain c = unit_chain(g.edge_count(), j);
    c += tree_walk(g, b.tree, g.edge(j).target, g.edge(j).source).lambda(g);
    b.cycles.push_back(std::move(c));
  }
  b.gram = gram_of(b.cycles);
  b.gram_inverse = b.cycles.empty() ? RationalMatrix{} : *inverse(b.gram);
  return b;
}

RationalVector cycle_coordinates(const Chain& x, const CycleBasis& b) {
  RationalVector pairing(b.genus());
  for (std::size_t a = 0; a < b.genus(); ++a) pairing[a] = inner(b.cycles[a], x);
  return multiply(b.gram_inverse, pairing);
}

Chain from_cycle_coordinates(const RationalVector& c, const CycleBasis& b) {
  return combine(b.cycles, c, b.edge_count);
}

Chain project(const Chain& x, const CycleBasis& b) {
  return from_cycle_coordinates(cycle_coordinates(x, b), b);
}

bool in_cycle_space(const MultiGraph& g, const Chain& x) { return boundary(g, x).is_zero(); }

RationalMatrix gram_of(const std::vector<Chain>& vectors) {
  RationalMatrix m(vectors.size(), RationalVector(vectors.size()));
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t c = a; c < vectors.size(); ++c) m[a][c] = m[c][a] = inner(vectors[a], vectors[c]);
  return m;
}

std::optional<RationalVector> span_coordinates(const Chain& x, const std::vector<Chain>& basis) {
  if (basis.empty()) {
    if (x.is_zero()) return RationalVector{};
    return std::nullopt;
  }
  RationalVector rhs(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) rhs[a] = inner(basis[a], x);
  auto c = solve(gram_of(basis), rhs);
  if (!c) throw Error(ErrorKind::Malformed, "basis is linearly dependent");
  if (!(combine(basis, *c, x.size()) == x)) return std::nullopt;
  return c;
}

std::optional<IntegerVector> lattice_coordinates(const Chain& x, const std::vector<Chain>& basis) {
  auto c = span_coordinates(x, basis);
  if (!c) return std::nullopt;
  IntegerVector out;
  for (const auto& v : *c) {
    if (!is_integral(v)) return std::nullopt;
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Chain> projected_edges(const CycleBasis& b) {
  std::vector<Chain> out;
  for (EdgeIndex j = 0; j < b.edge_count; ++j) out.push_back(project(unit_chain(b.edge_count, j), b));
  return out;
}

bool dual_pairing_check(const CycleBasis& b) {
  for (std::size_t a = 0; a < b.genus(); ++a) {
    for (std::size_t c = 0; c < b.genus(); ++c) {
      const Chain e = project(unit_chain(b.edge_count, b.cotree[c]), b);
      if (inner(b.cycles[a], e) != (a == c ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace crystalvor
