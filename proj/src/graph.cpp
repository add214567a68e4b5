#include "crystalvor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "crystalvor/error.hpp"

namespace crystalvor {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

MultiGraph MultiGraph::create(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  MultiGraph g;
  std::unordered_map<std::string, VertexIndex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error(ErrorKind::Malformed, "empty vertex label");
    if (!index.emplace(vertices[i], i).second)
      throw Error(ErrorKind::Malformed, "duplicate vertex '" + vertices[i] + "'");
  }
  if (vertices.empty()) throw Error(ErrorKind::Malformed, "graph has no vertices");
  std::set<std::string> ids;
  for (auto& e : edges) {
    if (e.id.empty()) throw Error(ErrorKind::Malformed, "empty edge id");
    if (!ids.insert(e.id).second) throw Error(ErrorKind::Malformed, "duplicate edge '" + e.id + "'");
    auto s = index.find(e.source);
    auto t = index.find(e.target);
    if (s == index.end() || t == index.end())
      throw Error(ErrorKind::DanglingEndpoint, "edge '" + e.id + "' names an unknown vertex");
    g.edges_.push_back(Edge{std::move(e.id), s->second, t->second});
  }
  g.vertices_ = std::move(vertices);
  g.build_incidence();
  if (component_count(g, std::vector<bool>(g.edge_count(), false)) != 1)
    throw Error(ErrorKind::Disconnected, "the underlying graph is not connected");
  return g;
}

MultiGraph MultiGraph::from_pairs(std::size_t vertex_count,
                                  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertex_count; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> specs;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (edges[j].first >= vertex_count || edges[j].second >= vertex_count)
      throw Error(ErrorKind::DanglingEndpoint, "edge endpoint out of range");
    specs.push_back({"e" + std::to_string(j + 1), labels[edges[j].first], labels[edges[j].second]});
  }
  return create(std::move(labels), std::move(specs));
}

void MultiGraph::build_incidence() {
  incidence_.assign(vertices_.size(), {});
  for (EdgeIndex j = 0; j < edges_.size(); ++j) {
    incidence_[edges_[j].source].push_back(j);
    if (!edges_[j].is_loop()) incidence_[edges_[j].target].push_back(j);
  }
}

std::optional<VertexIndex> MultiGraph::find_vertex(std::string_view label) const {
  for (VertexIndex i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<EdgeIndex> MultiGraph::find_edge(std::string_view id) const {
  for (EdgeIndex j = 0; j < edges_.size(); ++j)
    if (edges_[j].id == id) return j;
  return std::nullopt;
}

VertexIndex MultiGraph::vertex_or_throw(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(label) + "'");
  return *v;
}

MultiGraph reorient(const MultiGraph& g, const Orientation& o) {
  std::vector<EdgeSpec> specs;
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    auto s = g.vertex_label(e.source), t = g.vertex_label(e.target);
    if (o.signs[j] < 0) std::swap(s, t);
    specs.push_back({e.id, s, t});
  }
  return MultiGraph::create(g.vertex_labels(), std::move(specs));
}

// ---------------------------------------------------------------------------
// Walks

std::vector<VertexIndex> Walk::vertices(const MultiGraph& g) const {
  std::vector<VertexIndex> out{start};
  VertexIndex at = start;
  for (const auto& s : steps) {
    const Edge& e = g.edge(s.edge);
    const VertexIndex from = s.sign > 0 ? e.source : e.target;
    const VertexIndex to = s.sign > 0 ? e.target : e.source;
    if (from != at) throw Error(ErrorKind::Malformed, "walk steps do not chain at edge " + e.id);
    at = to;
    out.push_back(at);
  }
  return out;
}

VertexIndex Walk::end(const MultiGraph& g) const { return vertices(g).back(); }

bool Walk::is_valid(const MultiGraph& g) const {
  if (start >= g.vertex_count()) return false;
  for (const auto& s : steps)
    if (s.edge >= g.edge_count() || (s.sign != 1 && s.sign != -1)) return false;
  try {
    vertices(g);
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool Walk::is_directed() const {
  return std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.sign > 0; });
}

bool Walk::is_trail() const {
  std::set<EdgeIndex> seen;
  for (const auto& s : steps)
    if (!seen.insert(s.edge).second) return false;
  return true;
}

bool Walk::is_path(const MultiGraph& g) const {
  auto vs = vertices(g);
  std::set<VertexIndex> seen(vs.begin(), vs.end());
  return seen.size() == vs.size();
}

bool Walk::is_circuit(const MultiGraph& g) const {
  if (steps.empty() || !is_trail()) return false;
  auto vs = vertices(g);
  if (vs.front() != vs.back()) return false;
  std::set<VertexIndex> seen(vs.begin(), vs.end() - 1);
  return seen.size() + 1 == vs.size();
}

Chain Walk::lambda(const MultiGraph& g) const {
  Chain c(g.edge_count());
  for (const auto& s : steps) c[s.edge] += s.sign;
  return c;
}

// ---------------------------------------------------------------------------
// Connectivity

std::size_t component_count(const MultiGraph& g, const std::vector<bool>& removed) {
  DisjointSets sets(g.vertex_count());
  for (EdgeIndex j = 0; j < g.edge_count(); ++j)
    if (!removed[j]) sets.unite(g.edge(j).source, g.edge(j).target);
  std::size_t count = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (sets.find(v) == v) ++count;
  return count;
}

std::vector<EdgeIndex> find_bridges(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnseen), low(n, 0);
  std::vector<EdgeIndex> bridges;
  std::size_t clock = 0;
  struct Frame {
    VertexIndex v;
    EdgeIndex via;  // edge used to enter v; edge_count() for the root
    std::size_t next = 0;
  };
  for (VertexIndex root = 0; root < n; ++root) {
    if (order[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, g.edge_count()}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeIndex j = inc[f.next++];
        if (j == f.via || g.edge(j).is_loop()) continue;
        const VertexIndex w = g.other_end(j, f.v);
        if (order[w] == kUnseen) {
          order[w] = low[w] = clock++;
          stack.push_back({w, j});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > order[parent.v]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

namespace {

std::vector<bool> reachable(const MultiGraph& g, const Orientation& o, VertexIndex from,
                            bool forward) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex j : g.incident(v)) {
      const Edge& e = g.edge(j);
      VertexIndex tail = e.source, head = e.target;
      if (o.signs[j] < 0) std::swap(tail, head);
      if (!forward) std::swap(tail, head);
      if (tail == v && !seen[head]) {
        seen[head] = true;
        queue.push_back(head);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool is_strongly_connected(const MultiGraph& g, const Orientation& o) {
  return all_true(reachable(g, o, 0, true)) && all_true(reachable(g, o, 0, false));
}

Orientation strongly_connected_orientation(const MultiGraph& g) {
  const auto bridges = find_bridges(g);
  if (!bridges.empty()) {
    std::string list;
    for (auto j : bridges) list += (list.empty() ? "" : ", ") + g.edge(j).id;
    throw Error(ErrorKind::BridgeExists, "bridges: " + list);
  }
  Orientation stored = Orientation::stored(g);
  if (is_strongly_connected(g, stored)) return stored;

  Orientation o = stored;
  std::vector<bool> visited(g.vertex_count(), false), used(g.edge_count(), false);
  struct Frame {
    VertexIndex v;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{0}};
  visited[0] = true;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = g.incident(f.v);
    if (f.next == inc.size()) {
      stack.pop_back();
      continue;
    }
    const EdgeIndex j = inc[f.next++];
    if (used[j]) continue;
    used[j] = true;
    const Edge& e = g.edge(j);
    if (e.is_loop()) {
      o.signs[j] = 1;
      continue;
    }
    const VertexIndex w = g.other_end(j, f.v);
    // Tree edges point away from the root, back edges towards the ancestor.
    o.signs[j] = e.source == f.v ? 1 : -1;
    if (!visited[w]) {
      visited[w] = true;
      stack.push_back({w});
    }
  }
  return o;
}

MultiGraph collapse_bridges(const MultiGraph& g) {
  const auto bridges = find_bridges(g);
  if (bridges.empty()) return g;
  std::vector<bool> is_bridge(g.edge_count(), false);
  DisjointSets sets(g.vertex_count());
  for (auto j : bridges) {
    is_bridge[j] = true;
    sets.unite(g.edge(j).source, g.edge(j).target);
  }
  std::vector<std::size_t> new_index(g.vertex_count());
  std::vector<std::string> labels;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (sets.find(v) == v) {
      new_index[v] = labels.size();
      labels.push_back(g.vertex_label(v));
    }
  }
  std::vector<EdgeSpec> specs;
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    if (is_bridge[j]) continue;
    const Edge& e = g.edge(j);
    specs.push_back({e.id, labels[new_index[sets.find(e.source)]],
                     labels[new_index[sets.find(e.target)]]});
  }
  return MultiGraph::create(std::move(labels), std::move(specs));
}

// ---------------------------------------------------------------------------
// Divisors

long CanonicalDivisors::degree_plus() const { return std::accumulate(k_plus.begin(), k_plus.end(), 0L); }
long CanonicalDivisors::degree_minus() const { return std::accumulate(k_minus.begin(), k_minus.end(), 0L); }
long CanonicalDivisors::degree() const { return std::accumulate(k.begin(), k.end(), 0L); }

CanonicalDivisors canonical_divisors(const MultiGraph& g) {
  std::vector<long> out(g.vertex_count(), 0), in(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++out[e.source];
    ++in[e.target];
  }
  CanonicalDivisors d;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    d.k_plus.push_back(out[v] - 1);
    d.k_minus.push_back(in[v] - 1);
    d.k.push_back(out[v] + in[v] - 2);
  }
  return d;
}

}  // namespace crystalvor
