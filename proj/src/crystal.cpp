#include "crystalvor/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "crystalvor/error.hpp"

namespace crystalvor {

CrystalModel standard_realization(const MultiGraph& g, VertexIndex v0) {
  return standard_realization(g, cycle_basis(g), v0);
}

CrystalModel standard_realization(const MultiGraph& g, const CycleBasis& basis, VertexIndex v0) {
  if (v0 >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "base vertex out of range");
  CrystalModel m;
  m.base = v0;
  m.period = basis.cycles;
  m.edge_vectors = projected_edges(basis);
  m.offsets.assign(g.vertex_count(), Chain(g.edge_count()));
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{v0};
  seen[v0] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex j : g.incident(v)) {
      const VertexIndex w = g.other_end(j, v);
      if (seen[w]) continue;
      seen[w] = true;
      const bool forward = g.edge(j).source == v;
      m.offsets[w] = forward ? m.offsets[v] + m.edge_vectors[j] : m.offsets[v] - m.edge_vectors[j];
      queue.push_back(w);
    }
  }
  return m;
}

namespace {

Walk shortest_directed(const MultiGraph& g, VertexIndex from, VertexIndex to) {
  std::vector<std::optional<EdgeIndex>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex j : g.incident(v)) {
      const Edge& e = g.edge(j);
      if (e.source != v || seen[e.target]) continue;
      seen[e.target] = true;
      via[e.target] = j;
      queue.push_back(e.target);
    }
  }
  if (!seen[to]) throw Error(ErrorKind::NotStronglyConnected, "no directed path between vertices");
  Walk w{from, {}};
  for (VertexIndex v = to; v != from; v = g.edge(*via[v]).source) w.steps.push_back({*via[v], 1});
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

}  // namespace

Walk walk_to_directed_path(const MultiGraph& g, const Walk& w) {
  if (!w.is_valid(g)) throw Error(ErrorKind::Malformed, "steps do not chain");
  if (!is_strongly_connected(g, Orientation::stored(g)))
    throw Error(ErrorKind::NotStronglyConnected, "stored orientation is not strongly connected");
  Walk path{w.start, {}};
  std::vector<VertexIndex> on_path{w.start};
  VertexIndex at = w.start;
  for (const auto& s : w.steps) {
    const Edge& e = g.edge(s.edge);
    Walk detour = s.sign == 1 ? Walk{at, {{s.edge, 1}}} : shortest_directed(g, at, e.source);
    const auto dv = detour.vertices(g);
    std::size_t i = dv.size() - 1;
    while (std::find(on_path.begin(), on_path.end(), dv[i]) == on_path.end()) --i;
    const std::size_t cut = std::find(on_path.begin(), on_path.end(), dv[i]) - on_path.begin();
    path.steps.resize(cut);
    on_path.resize(cut + 1);
    for (std::size_t k = i; k < detour.steps.size(); ++k) {
      path.steps.push_back(detour.steps[k]);
      on_path.push_back(dv[k + 1]);
    }
    at = on_path.back();
  }
  return path;
}

std::vector<Walk> enumerate_directed_trails(const MultiGraph& g, VertexIndex v0, std::size_t guard) {
  if (v0 >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "base vertex out of range");
  std::vector<Walk> out;
  std::vector<bool> used(g.edge_count(), false);
  Walk current{v0, {}};
  auto extend = [&](auto&& self, VertexIndex at) -> void {
    if (out.size() >= guard)
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(guard) + " directed trails");
    out.push_back(current);
    for (EdgeIndex j : g.incident(at)) {
      if (used[j] || g.edge(j).source != at) continue;
      used[j] = true;
      current.steps.push_back({j, 1});
      self(self, g.edge(j).target);
      current.steps.pop_back();
      used[j] = false;
    }
  };
  extend(extend, v0);
  std::stable_sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
    if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
    return std::lexicographical_compare(
        a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
        [](const Step& x, const Step& y) { return x.edge < y.edge; });
  });
  return out;
}

std::vector<Segment> crystal_in_cell(const MultiGraph& g, const VoronoiCell& cell, VertexIndex v0,
                                     std::size_t guard) {
  const auto edges = projected_edges(cell.basis);
  auto inside = [&](const Chain& p) {
    for (const auto& h : cell.halfspaces)
      if (inner(h.normal.chain, p) > h.offset) return false;
    return true;
  };
  std::vector<Segment> out;
  std::set<std::pair<Chain, Chain>> seen;
  for (const auto& w : enumerate_directed_trails(g, v0, guard)) {
    Chain p(g.edge_count());
    for (const auto& s : w.steps) {
      Chain q = p + edges[s.edge];
      if (seen.insert({p, q}).second) {
        if (!inside(p) || !inside(q))
          throw Error(ErrorKind::NotInCell, "trail segment leaves the cell");
        out.push_back({p, q, s.edge});
      }
      p = std::move(q);
    }
  }
  return out;
}

HiddenTilingSetup prepare_hidden_tiling(const MultiGraph& input, const PipelineOptions& options) {
  MultiGraph collapsed = collapse_bridges(input);
  if (collapsed.genus() < 2)
    throw Error(ErrorKind::GenusTooSmall,
                "dim H_1 = " + std::to_string(collapsed.genus()) + " after collapsing bridges; need at least 2");
  Orientation o = Orientation::stored(collapsed);
  if (options.orient == OrientMode::Auto) {
    o = strongly_connected_orientation(collapsed);
  } else if (!is_strongly_connected(collapsed, o)) {
    throw Error(ErrorKind::NotStronglyConnected, "stored orientation is not strongly connected");
  }
  MultiGraph g = reorient(collapsed, o);
  BaseVertexChoice choice = choose_base_vertex(g);
  VertexIndex base = choice.v_star;
  if (options.base_vertex) base = g.vertex_or_throw(*options.base_vertex);
  VoronoiCell cell = build_cell(g, options.orientation_guard);
  CrystalModel model = standard_realization(g, cell.basis, base);
  return HiddenTilingSetup{std::move(g), std::move(o), std::move(choice), base, std::move(cell),
                           std::move(model)};
}

std::vector<Segment> fundamental_segments(const CrystalModel& model, const MultiGraph& g) {
  std::vector<Segment> out;
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    const Chain& a = model.offsets[g.edge(j).source];
    out.push_back({a, a + model.edge_vectors[j], j});
  }
  return out;
}

VerificationReport verify_hidden_tiling(const MultiGraph& g, const PipelineOptions& options) {
  const HiddenTilingSetup setup = prepare_hidden_tiling(g, options);
  VerificationReport report =
      verify_segments(cell_tiling(setup.cell), fundamental_segments(setup.model, setup.graph));
  report.base_vertex = setup.graph.vertex_label(setup.base);
  return report;
}

namespace {

RationalVector fractional(RationalVector c) {
  for (auto& v : c) v -= Rational(floor_of(v));
  return c;
}

}  // namespace

std::pair<std::size_t, std::size_t> orbit_counts(const CrystalModel& model, const MultiGraph& g) {
  auto coords = [&](const Chain& x) {
    auto c = span_coordinates(x, model.period);
    if (!c) throw Error(ErrorKind::NotInH, "point outside the period span");
    return *c;
  };
  std::set<RationalVector> vertices;
  for (const auto& b : model.offsets) vertices.insert(fractional(coords(b)));
  std::set<std::pair<RationalVector, Chain>> segments;
  for (const auto& s : fundamental_segments(model, g)) {
    if (s.a == s.b) continue;
    std::pair<RationalVector, Chain> fwd{fractional(coords(s.a)), s.b - s.a};
    std::pair<RationalVector, Chain> bwd{fractional(coords(s.b)), s.a - s.b};
    segments.insert(std::min(fwd, bwd));
  }
  return {vertices.size(), segments.size()};
}

QuotientCounts quotient_check(const MultiGraph& g) {
  const MultiGraph collapsed = collapse_bridges(g);
  const auto [v, e] = orbit_counts(standard_realization(g, 0), g);
  return {v, e, v == collapsed.vertex_count() && e == collapsed.edge_count()};
}

std::vector<Segment> window(const CrystalModel& model, const MultiGraph& g,
                            const std::vector<std::pair<long, long>>& box) {
  if (box.size() != model.period.size())
    throw Error(ErrorKind::Usage, "window needs one range per period vector");
  std::vector<Segment> out;
  for (const auto& [lo, hi] : box)
    if (lo > hi) return out;
  const auto base = fundamental_segments(model, g);
  std::vector<long> h;
  for (const auto& r : box) h.push_back(r.first);
  std::set<std::pair<Chain, Chain>> seen;
  while (true) {
    Chain shift(g.edge_count());
    for (std::size_t a = 0; a < h.size(); ++a) shift += Rational(h[a]) * model.period[a];
    for (const auto& s : base) {
      Segment t{s.a + shift, s.b + shift, s.edge};
      if (seen.insert({t.a, t.b}).second) out.push_back(std::move(t));
    }
    std::size_t k = h.size();
    while (k > 0 && h[k - 1] == box[k - 1].second) {
      h[k - 1] = box[k - 1].first;
      --k;
    }
    if (k == 0) break;
    ++h[k - 1];
  }
  return out;
}

}  // namespace crystalvor
