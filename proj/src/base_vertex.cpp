#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "crystalvor/error.hpp"
#include "crystalvor/graph.hpp"

namespace crystalvor {

namespace {

// Shortest directed path (fewest edges, lowest edge index first) from `from`
// to any vertex accepted by `is_goal`. Vertices rejected by `may_pass` are
// never expanded, though they may be the goal. When `reverse` is set, edges
// are followed backwards and the returned walk is re-expressed forwards,
// i.e. it runs from the goal to `from`.
template <class Goal, class Pass>
std::optional<Walk> directed_search(const MultiGraph& g, VertexIndex from, Goal is_goal,
                                    Pass may_pass, bool reverse) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<EdgeIndex>> via(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexIndex> queue{from};
  seen[from] = true;
  std::optional<VertexIndex> found;
  while (!queue.empty() && !found) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    if (v != from && !may_pass(v)) continue;
    for (EdgeIndex j : g.incident(v)) {
      const Edge& e = g.edge(j);
      if (e.is_loop()) continue;
      const VertexIndex tail = reverse ? e.target : e.source;
      const VertexIndex head = reverse ? e.source : e.target;
      if (tail != v || seen[head]) continue;
      seen[head] = true;
      via[head] = j;
      if (is_goal(head)) {
        found = head;
        break;
      }
      queue.push_back(head);
    }
  }
  if (!found) return std::nullopt;
  std::vector<EdgeIndex> edges;
  for (VertexIndex v = *found; v != from;) {
    const EdgeIndex j = *via[v];
    edges.push_back(j);
    v = reverse ? g.edge(j).target : g.edge(j).source;
  }
  Walk w;
  if (reverse) {
    w.start = *found;
  } else {
    std::reverse(edges.begin(), edges.end());
    w.start = from;
  }
  for (auto j : edges) w.steps.push_back({j, 1});
  return w;
}

Walk path_between(const MultiGraph& g, VertexIndex a, VertexIndex b) {
  auto w = directed_search(
      g, a, [b](VertexIndex v) { return v == b; }, [](VertexIndex) { return true; }, false);
  if (!w) throw Error(ErrorKind::NotStronglyConnected, "no directed path between vertices");
  return *w;
}

// Sub-walk of a directed circuit from its occurrence of vertex a to vertex b.
Walk circuit_arc(const MultiGraph& g, const Walk& circuit, VertexIndex a, VertexIndex b) {
  auto vs = circuit.vertices(g);
  vs.pop_back();
  const std::size_t m = vs.size();
  const std::size_t ia = std::find(vs.begin(), vs.end(), a) - vs.begin();
  Walk w{a, {}};
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = (ia + k) % m;
    if (vs[i] == b && k > 0) break;
    if (vs[i] == b && a == b) break;
    w.steps.push_back(circuit.steps[i]);
  }
  return w;
}

Walk rotate_circuit(const MultiGraph& g, const Walk& circuit, VertexIndex at) {
  auto vs = circuit.vertices(g);
  vs.pop_back();
  const std::size_t m = vs.size();
  const std::size_t ia = std::find(vs.begin(), vs.end(), at) - vs.begin();
  Walk w{at, {}};
  for (std::size_t k = 0; k < m; ++k) w.steps.push_back(circuit.steps[(ia + k) % m]);
  return w;
}

Walk concat(Walk a, const Walk& b) {
  a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
  return a;
}

Walk single(VertexIndex start, EdgeIndex j) { return Walk{start, {{j, 1}}}; }

BaseVertexChoice two_circuits(VertexIndex at, Walk c1, Walk c2) {
  BaseVertexChoice c;
  c.kind = WitnessKind::TwoCircuits;
  c.v_star = at;
  c.circuits = {std::move(c1), std::move(c2)};
  return c;
}

BaseVertexChoice three_paths(VertexIndex v_star, VertexIndex v_star_star, Walk p1, Walk p2,
                             Walk p3) {
  BaseVertexChoice c;
  c.kind = WitnessKind::ThreePaths;
  c.v_star = v_star;
  c.v_star_star = v_star_star;
  c.p1 = std::move(p1);
  c.p2 = std::move(p2);
  c.p3 = std::move(p3);
  return c;
}

std::vector<EdgeIndex> loops_at(const MultiGraph& g, VertexIndex v) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex j : g.incident(v))
    if (g.edge(j).is_loop()) out.push_back(j);
  return out;
}

std::vector<EdgeIndex> edges_from_to(const MultiGraph& g, VertexIndex a, VertexIndex b) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex j = 0; j < g.edge_count(); ++j)
    if (g.edge(j).source == a && g.edge(j).target == b) out.push_back(j);
  return out;
}

BaseVertexChoice one_vertex_case(const MultiGraph& g) {
  auto loops = loops_at(g, 0);
  return two_circuits(0, single(0, loops[0]), single(0, loops[1]));
}

BaseVertexChoice two_vertex_case(const MultiGraph& g) {
  for (VertexIndex v = 0; v < 2; ++v) {
    auto loops = loops_at(g, v);
    if (loops.size() >= 2) return two_circuits(v, single(v, loops[0]), single(v, loops[1]));
  }
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    if (!g.edge(j).is_loop()) continue;
    const VertexIndex v = g.edge(j).source, w = 1 - v;
    const auto out = edges_from_to(g, v, w), back = edges_from_to(g, w, v);
    Walk round{v, {{out.front(), 1}, {back.front(), 1}}};
    return two_circuits(v, single(v, j), std::move(round));
  }
  const auto forward = edges_from_to(g, 0, 1), backward = edges_from_to(g, 1, 0);
  const bool from_zero = forward.size() >= 2;
  const VertexIndex vs = from_zero ? 0 : 1, vss = from_zero ? 1 : 0;
  const auto& two = from_zero ? forward : backward;
  const auto& one = from_zero ? backward : forward;
  return three_paths(vs, vss, single(vss, one.front()), single(vs, two[0]), single(vs, two[1]));
}

BaseVertexChoice general_case(const MultiGraph& g) {
  // A directed circuit through vertex 0: its first non-loop out-edge, then
  // the shortest way home.
  std::optional<EdgeIndex> first;
  for (EdgeIndex j : g.incident(0))
    if (!g.edge(j).is_loop() && g.edge(j).source == 0) {
      first = j;
      break;
    }
  if (!first) throw Error(ErrorKind::NotStronglyConnected, "vertex has no outgoing edge");
  const Walk circuit = concat(single(0, *first), path_between(g, g.edge(*first).target, 0));

  std::vector<bool> on_circuit(g.vertex_count(), false);
  std::set<EdgeIndex> circuit_edges;
  for (auto v : circuit.vertices(g)) on_circuit[v] = true;
  for (auto& s : circuit.steps) circuit_edges.insert(s.edge);

  auto off = std::find(on_circuit.begin(), on_circuit.end(), false);
  if (off == on_circuit.end()) {
    // Hamiltonian circuit: any further edge closes the witness.
    EdgeIndex extra = 0;
    while (circuit_edges.count(extra) != 0) ++extra;
    const Edge& e = g.edge(extra);
    if (e.is_loop())
      return two_circuits(e.source, single(e.source, extra), rotate_circuit(g, circuit, e.source));
    return three_paths(e.source, e.target, circuit_arc(g, circuit, e.target, e.source),
                       single(e.source, extra), circuit_arc(g, circuit, e.source, e.target));
  }

  const VertexIndex v = static_cast<VertexIndex>(off - on_circuit.begin());
  auto on = [&](VertexIndex u) { return on_circuit[u]; };
  auto not_on = [&](VertexIndex u) { return !on_circuit[u]; };
  // p_out: v -> v1 on the circuit; p_in: v2 on the circuit -> v.
  const auto p_out = directed_search(g, v, on, not_on, false);
  const auto p_in = directed_search(g, v, on, not_on, true);
  if (!p_out || !p_in) throw Error(ErrorKind::NotStronglyConnected, "vertex cannot reach circuit");

  const auto out_vs = p_out->vertices(g);
  const auto in_vs = p_in->vertices(g);
  // First vertex of p_in after its start that also lies on p_out.
  std::size_t k = 1;
  while (std::find(out_vs.begin(), out_vs.end(), in_vs[k]) == out_vs.end()) ++k;
  const VertexIndex meet = in_vs[k];
  const std::size_t m = std::find(out_vs.begin(), out_vs.end(), meet) - out_vs.begin();
  Walk in_part{p_in->start, {p_in->steps.begin(), p_in->steps.begin() + static_cast<long>(k)}};
  Walk out_part{meet, {p_out->steps.begin() + static_cast<long>(m), p_out->steps.end()}};
  const Walk detour = concat(in_part, out_part);

  const VertexIndex v1 = out_vs.back();
  const VertexIndex v2 = in_vs.front();
  if (v1 == v2) return two_circuits(v1, rotate_circuit(g, circuit, v1), detour);
  return three_paths(v2, v1, circuit_arc(g, circuit, v1, v2), circuit_arc(g, circuit, v2, v1),
                     detour);
}

bool directed_path_between(const MultiGraph& g, const Walk& w, VertexIndex a, VertexIndex b) {
  return w.is_valid(g) && !w.steps.empty() && w.is_directed() && w.is_path(g) && w.start == a &&
         w.end(g) == b;
}

std::set<VertexIndex> interior(const MultiGraph& g, const Walk& w) {
  auto vs = w.vertices(g);
  return std::set<VertexIndex>(vs.begin() + 1, vs.end() - 1);
}

}  // namespace

BaseVertexChoice choose_base_vertex(const MultiGraph& g) {
  if (g.genus() < 2) throw Error(ErrorKind::GenusTooSmall, "dim H_1 must be at least 2");
  if (!is_strongly_connected(g, Orientation::stored(g)))
    throw Error(ErrorKind::NotStronglyConnected, "stored orientation is not strongly connected");
  BaseVertexChoice c;
  if (g.vertex_count() == 1) {
    c = one_vertex_case(g);
  } else if (g.vertex_count() == 2) {
    c = two_vertex_case(g);
  } else {
    c = general_case(g);
  }
  if (!verify_base_vertex_choice(g, c))
    throw Error(ErrorKind::Malformed, "internal error: base vertex witness failed verification");
  return c;
}

bool verify_base_vertex_choice(const MultiGraph& g, const BaseVertexChoice& c) {
  if (c.kind == WitnessKind::TwoCircuits) {
    if (c.circuits.size() != 2) return false;
    std::set<EdgeIndex> edges;
    std::vector<std::set<VertexIndex>> verts;
    for (const auto& w : c.circuits) {
      if (!w.is_valid(g) || !w.is_directed() || !w.is_circuit(g) || w.start != c.v_star)
        return false;
      for (auto& s : w.steps)
        if (!edges.insert(s.edge).second) return false;
      auto vs = w.vertices(g);
      verts.emplace_back(vs.begin(), vs.end());
    }
    std::vector<VertexIndex> common;
    std::set_intersection(verts[0].begin(), verts[0].end(), verts[1].begin(), verts[1].end(),
                          std::back_inserter(common));
    return common == std::vector<VertexIndex>{c.v_star};
  }
  if (c.v_star == c.v_star_star) return false;
  if (!directed_path_between(g, c.p1, c.v_star_star, c.v_star) ||
      !directed_path_between(g, c.p2, c.v_star, c.v_star_star) ||
      !directed_path_between(g, c.p3, c.v_star, c.v_star_star))
    return false;
  std::set<EdgeIndex> edges;
  for (const Walk* w : {&c.p1, &c.p2, &c.p3})
    for (auto& s : w->steps)
      if (!edges.insert(s.edge).second) return false;
  const auto a = interior(g, c.p1), b = interior(g, c.p2), d = interior(g, c.p3);
  std::vector<VertexIndex> x;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(x));
  std::set_intersection(a.begin(), a.end(), d.begin(), d.end(), std::back_inserter(x));
  std::set_intersection(b.begin(), b.end(), d.begin(), d.end(), std::back_inserter(x));
  return x.empty();
}

}  // namespace crystalvor
