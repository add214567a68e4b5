#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "census.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "support.hpp"

using namespace crystalvor;
using support::bar;
using support::chain;
using support::kind_of;

namespace {

std::set<Chain> vertex_points(const VoronoiCell& cell) {
  std::set<Chain> out;
  for (const auto& v : cell.vertices) out.insert(v.point);
  return out;
}

bool inside(const VoronoiCell& cell, const Chain& y) {
  for (const auto& h : cell.halfspaces)
    if (inner(h.normal.chain, y) > h.offset) return false;
  return true;
}

RationalMatrix coordinate_rows(const VoronoiCell& cell, const std::vector<Chain>& points) {
  RationalMatrix rows;
  for (const auto& p : points) rows.push_back(cycle_coordinates(p, cell.basis));
  return rows;
}

}  // namespace

TEST_CASE("graphene halfspaces") {
  auto g = load_example("graphene").graph;
  auto g1 = chain(g, {{"e1", 1}, {"e3", 1}});
  auto g2 = chain(g, {{"e2", 1}, {"e3", 1}});
  std::set<std::pair<Chain, long>> expected = {{g1, 2}, {-g1, 0}, {g2, 2},
                                               {-g2, 0}, {g1 - g2, 1}, {g2 - g1, 1}};
  std::set<std::pair<Chain, long>> got;
  for (const auto& h : cell_halfspaces(g)) got.insert({h.normal.chain, h.offset});
  CHECK(got == expected);
}

TEST_CASE("K4 and diamond halfspaces") {
  auto k4 = load_example("k4").graph;
  auto hs = cell_halfspaces(k4);
  CHECK(hs.size() == 14);
  std::set<std::pair<Chain, long>> got;
  for (const auto& h : hs) got.insert({h.normal.chain, h.offset});
  CHECK(got.count({chain(k4, {{"f1", 1}, {"f2", 1}, {"f3", 1}}), 3}) == 1);
  CHECK(got.count({chain(k4, {{"e2", -1}, {"e3", -1}, {"f2", 1}, {"f3", 1}}), 2}) == 1);
  CHECK(cell_halfspaces(load_example("diamond").graph).size() == 12);
  CHECK(kind_of([] { cell_halfspaces(MultiGraph::from_pairs(2, {{0, 1}})); }) ==
        ErrorKind::BridgeExists);
}

TEST_CASE("graphene vertices") {
  auto g = load_example("graphene").graph;
  auto cell = build_cell(g);
  auto& b = cell.basis;
  auto e1 = bar(g, b, {{"e1", 1}}), e2 = bar(g, b, {{"e2", 1}}), e3 = bar(g, b, {{"e3", 1}});
  CHECK(cell.dim == 2);
  CHECK(cell.vertices.size() == 6);
  CHECK(vertex_points(cell) == std::set<Chain>{Chain(3), e1, e2, e1 + e3, e2 + e3, e1 + e2 + e3});
  for (const auto& v : cell.vertices) {
    CHECK(v.point == project(edge_sum(3, v.q_set), b));
    for (EdgeIndex j : v.q_set) CHECK(v.orientation.signs[j] == 1);
  }
}

TEST_CASE("diamond and K4 vertex counts") {
  CHECK(build_cell(load_example("diamond").graph).vertices.size() == 14);
  CHECK(build_cell(load_example("k4").graph).vertices.size() == 24);
}

TEST_CASE("support function") {
  auto g = load_example("graphene").graph;
  auto g1 = chain(g, {{"e1", 1}, {"e3", 1}});
  auto g2 = chain(g, {{"e2", 1}, {"e3", 1}});
  CHECK(support_function(g, g1) == 2);
  CHECK(support_function(g, Chain(3)) == 0);
  CHECK(support_function(g, g1 - g2) == 1);
  CHECK(kind_of([&] { support_function(g, chain(g, {{"e1", 1}})); }) == ErrorKind::NotInH);
}

TEST_CASE("reduce point") {
  auto g = load_example("graphene").graph;
  auto cell = build_cell(g);
  auto r = reduce_point(cell, cell.center);
  CHECK(r.h == IntegerVector{0, 0});
  CHECK(r.y == cell.center);

  auto g1 = chain(g, {{"e1", 1}, {"e3", 1}});
  r = reduce_point(cell, cell.center + g1);
  CHECK(r.y == cell.center);
  CHECK(from_cycle_coordinates({Rational(r.h[0]), Rational(r.h[1])},
                                                          cell.basis) == g1);

  r = reduce_point(cell, Chain(3));
  CHECK(r.h == IntegerVector{0, 0});
  CHECK(r.y.is_zero());
}

TEST_CASE("facets containing a point") {
  auto g = load_example("graphene").graph;
  auto cell = build_cell(g);
  CHECK_FALSE(facets_containing(cell, bar(g, cell.basis, {{"e1", 1}})).empty());
  CHECK(facets_containing(cell, cell.center).empty());

  std::set<Chain> at_zero;
  for (const auto& h : facets_containing(cell, Chain(3))) {
    CHECK(h.offset == 0);
    at_zero.insert(h.normal.chain);
  }
  CHECK(at_zero == std::set<Chain>{-chain(g, {{"e1", 1}, {"e3", 1}}),
                                   -chain(g, {{"e2", 1}, {"e3", 1}})});
  auto far = Rational(3) * chain(g, {{"e1", 1}, {"e3", 1}});
  CHECK(kind_of([&] { facets_containing(cell, far); }) == ErrorKind::NotInCell);
}

TEST_CASE("face dimension") {
  auto g = load_example("graphene").graph;
  auto cell = build_cell(g);
  auto e1 = bar(g, cell.basis, {{"e1", 1}});
  std::vector<Chain> vertex{e1}, center{cell.center}, edge{Chain(3), e1};
  CHECK(face_dimension(cell, vertex) == 0);
  CHECK(face_dimension(cell, center) == 2);
  CHECK(face_dimension(cell, edge) == 1);
  std::vector<Chain> midpoint{make_rational(1, 2) * e1};
  CHECK(face_dimension(cell, midpoint) == 1);
}

TEST_CASE("volumes of the example cells") {
  for (const char* name : {"graphene", "diamond", "k4"}) {
    CAPTURE(name);
    auto g = load_example(name).graph;
    auto cell = build_cell(g);
    CHECK(coordinate_volume(cell) == 1);
    std::vector<RationalVector> gens;
    for (const auto& e : projected_edges(cell.basis)) gens.push_back(cycle_coordinates(e, cell.basis));
    CHECK(oracle::zonotope_volume(gens, cell.dim) == 1);
  }
}

TEST_CASE("polytope volume of a unit square and a simplex") {
  std::vector<RationalVector> square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  // Facets x >= 0, x <= 1, y >= 0, y <= 1.
  std::vector<std::vector<bool>> inc = {{true, false, true, false},
                                        {false, true, false, true},
                                        {true, true, false, false},
                                        {false, false, true, true}};
  CHECK(polytope_volume(square, inc, 2) == 1);
  std::vector<RationalVector> simplex = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<bool>> faces = {{true, true, true, false},
                                          {true, true, false, true},
                                          {true, false, true, true},
                                          {false, true, true, true}};
  CHECK(polytope_volume(simplex, faces, 3) == make_rational(1, 6));
}

TEST_CASE("cell identities on bridgeless small graphs") {
  std::mt19937_64 rng(3);
  for (const auto& g : census::bridgeless_census(3, 5)) {
    auto cell = build_cell(g);
    const auto& b = cell.basis;
    const std::size_t d = cell.dim;

    // Vertices against the brute-force system solve.
    std::set<RationalVector> coords;
    for (const auto& v : cell.vertices) coords.insert(cycle_coordinates(v.point, b));
    CHECK(coords == oracle::subset_vertices(b, cell.halfspaces));
    CHECK(coords == oracle::subset_vertices_integral(b, cell.halfspaces));
    CHECK(cell.halfspaces.size() == enumerate_elementary_cycles(g).size());
    CHECK(cell.vertices.size() == enumerate_strong_orientations(g).size());

    // Facet contents and irredundancy.
    for (const auto& h : cell.halfspaces) {
      std::vector<Chain> tight;
      for (const auto& v : cell.vertices) {
        if (inner(h.normal.chain, v.point) != h.offset) continue;
        tight.push_back(v.point);
        std::set<EdgeIndex> q(v.q_set.begin(), v.q_set.end());
        for (auto j : h.normal.plus) CHECK(q.count(j) == 1);
        for (auto j : h.normal.minus) CHECK(q.count(j) == 0);
      }
      REQUIRE_FALSE(tight.empty());
      std::vector<Chain> diffs;
      for (const auto& p : tight) diffs.push_back(p - tight[0]);
      CHECK(rank(coordinate_rows(cell, diffs)) == d - 1);
    }

    // Central symmetry and the two special vertices.
    auto points = vertex_points(cell);
    for (const auto& p : points) CHECK(points.count(Rational(2) * cell.center - p) == 1);
    if (is_strongly_connected(g, Orientation::stored(g))) {
      CHECK(points.count(Chain(g.edge_count())) == 1);
      CHECK(points.count(Rational(2) * cell.center) == 1);
    }

    // Support function against the vertex maximum.
    for (int k = 0; k < 20; ++k) {
      auto u = randomized::cycle(rng, b);
      Rational best = inner(u, cell.vertices[0].point);
      for (const auto& v : cell.vertices) best = std::max(best, inner(u, v.point));
      CHECK(support_function(g, u) == best);
    }

    // Reduction lands in the cell; interior points reduce uniquely.
    for (int k = 0; k < 20; ++k) {
      auto x = randomized::cycle(rng, b);
      auto r = reduce_point(cell, x);
      CHECK(inside(cell, r.y));
      if (tight_halfspaces(cell, r.y).empty()) {
        auto shift = randomized::integer_vector(rng, d, 3);
        RationalVector s;
        for (const auto& z : shift) s.emplace_back(z);
        auto again = reduce_point(cell, x + from_cycle_coordinates(s, b));
        CHECK(again.y == r.y);
      }
    }

    CHECK(coordinate_volume(cell) == 1);
  }
}

TEST_CASE("reorientation translates the vertex set") {
  for (const auto& g : census::bridgeless_census(3, 5)) {
    auto cell = build_cell(g);
    const std::size_t m = g.edge_count();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); mask += 3) {
      Orientation o{std::vector<int>(m, 1)};
      std::vector<EdgeIndex> flipped;
      for (std::size_t j = 0; j < m; ++j)
        if ((mask >> j) & 1U) {
          o.signs[j] = -1;
          flipped.push_back(j);
        }
      auto other = build_cell(reorient(g, o));
      const auto shift = project(edge_sum(m, flipped), cell.basis);
      std::set<Chain> moved, expected;
      for (const auto& v : other.vertices) {
        Chain p = v.point;
        for (auto j : flipped) p[j] = -p[j];
        moved.insert(p);
      }
      for (const auto& v : cell.vertices) expected.insert(v.point - shift);
      CHECK(moved == expected);
    }
  }
}

TEST_CASE("cell tiling agrees with reduce_point") {
  auto g = load_example("k4").graph;
  auto cell = build_cell(g);
  auto tiling = cell_tiling(cell);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    auto x = randomized::cycle(rng, cell.basis);
    auto a = reduce_point(cell, x);
    auto t = tiling.reduce(x);
    CHECK(a.h == t.h);
    CHECK(a.y == t.y);
    CHECK(tiling.contains(t.y));
  }
}
