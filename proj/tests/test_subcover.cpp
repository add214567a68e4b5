#include "doctest.h"

#include <random>
#include <set>

#include "census.hpp"
#include "crystalvor/subcover.hpp"
#include "random.hpp"
#include "support.hpp"

using namespace crystalvor;
using support::chain;
using support::kind_of;
using support::q;
using support::same_lattice;

namespace {

struct Lonsdaleite {
  Example ex = load_example("lonsdaleite");
  const MultiGraph& g = ex.graph;
  CycleBasis b = cycle_basis(g);
  Subspace s = complement(b, ex.vanishing);
  Chain q1, q2, q3;

  Lonsdaleite() {
    q1 = project_prime(ex.named_chains.at(0).second, s);
    q2 = project_prime(ex.named_chains.at(1).second, s);
    q3 = project_prime(ex.named_chains.at(2).second, s);
  }
  Chain prime(std::vector<std::pair<std::string, long>> terms) const {
    return project_prime(chain(g, terms), s);
  }
  Chain qs(long a, long b2, long c) const {
    return Rational(a) * q1 + Rational(b2) * q2 + Rational(c) * q3;
  }
};

Chain scaled(long k, const Chain& c) { return Rational(k) * c; }

}  // namespace

TEST_CASE("complement of the trivial and the full subgroup") {
  auto g = load_example("k4").graph;
  auto b = cycle_basis(g);
  auto none = complement(b, {});
  CHECK(none.dimension() == 3);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    auto x = randomized::chain(rng, g.edge_count());
    CHECK(project_prime(x, none) == project(x, b));
  }
  auto full = complement(b, b.cycles);
  CHECK(full.dimension() == 0);
  CHECK(project_prime(chain(g, {{"f1", 1}}), full).is_zero());
  CHECK(kind_of([&] { complement(b, {chain(g, {{"e1", 1}})}); }) == ErrorKind::NotInH);
  CHECK(generators_from_coordinates(b, {{1, 0, -1}})[0] == b.cycles[0] - b.cycles[2]);
  CHECK(kind_of([&] { generators_from_coordinates(b, {{1, 0}}); }) == ErrorKind::Usage);
}

TEST_CASE("lonsdaleite complement and projection") {
  Lonsdaleite L;
  CHECK(L.s.dimension() == 3);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    auto x = randomized::chain(rng, L.g.edge_count());
    auto px = project_prime(x, L.s);
    CHECK(project_prime(px, L.s) == px);
    for (const auto& l : L.ex.vanishing) CHECK(inner(px, l) == 0);
    CHECK(boundary(L.g, px).is_zero());
  }
  for (const auto& v : L.s.basis) CHECK(project_prime(v, L.s) == v);
}

TEST_CASE("lonsdaleite projected edges") {
  Lonsdaleite L;
  CHECK(L.prime({{"l1", 1}}) == L.qs(0, 0, 3));
  CHECK(L.prime({{"l2", 1}}) == L.qs(0, 0, 3));
  CHECK(L.prime({{"m1", 1}}) == L.qs(1, 0, 1));
  CHECK(L.prime({{"m2", 1}}) == L.qs(0, 1, 1));
  CHECK(L.prime({{"m3", 1}}) == L.qs(1, 1, -1));
  CHECK(L.prime({{"n1", 1}}) == L.qs(1, 0, -1));
  CHECK(L.prime({{"n2", 1}}) == L.qs(0, 1, -1));
  CHECK(L.prime({{"n3", 1}}) == L.qs(1, 1, 1));
  // The alternative expressions of q1, q2, q3.
  CHECK(L.q1 == L.prime({{"n2", -1}, {"m3", 1}}));
  CHECK(L.q2 == L.prime({{"n1", -1}, {"m3", 1}}));
  CHECK(L.q3 == L.q1 + L.q2 - L.prime({{"m3", 1}}));
}

TEST_CASE("lonsdaleite Gram of q") {
  Lonsdaleite L;
  CHECK(gram_of({L.q1, L.q2, L.q3}) == RationalMatrix{{q("1/3"), q("-1/6"), 0},
                                                      {q("-1/6"), q("1/3"), 0},
                                                      {0, 0, q("1/24")}});
}

TEST_CASE("lonsdaleite integral vectors of E'") {
  Lonsdaleite L;
  auto g1 = chain(L.g, {{"m1", 1}, {"m3", 1}, {"n1", 1}, {"n3", 1}});
  auto g2 = chain(L.g, {{"m2", 1}, {"m3", 1}, {"n2", 1}, {"n3", 1}});
  auto g3 = chain(L.g, {{"m1", 1}, {"m2", 1}, {"m3", -1}, {"n1", -1}, {"n2", -1}, {"n3", 1},
                        {"l1", 3}, {"l2", 3}});
  for (const auto& x : {g1, g2, g3}) CHECK(project_prime(x, L.s) == x);
  CHECK(g1 == L.qs(4, 2, 0));
  CHECK(g2 == L.qs(2, 4, 0));
  CHECK(g3 == L.qs(0, 0, 24));
  CHECK(gram_of({g1, g2, g3}) == RationalMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 24}});

  auto t = lattice_triple(L.b, L.s);
  CHECK(same_lattice(t.intersection, {g1, g2, g3}));
  CHECK(same_lattice(t.image_chains, {L.q1, L.q2, L.q3}));
}

TEST_CASE("lonsdaleite image of the cycle lattice") {
  Lonsdaleite L;
  auto t = lattice_triple(L.b, L.s);
  CHECK(same_lattice(t.image_cycles, {L.qs(2, 1, 0), L.qs(1, 2, 0), L.qs(0, 0, 8)}));
  const std::vector<Chain> quoted = {L.qs(2, 2, 0), L.qs(1, 2, 0), L.qs(0, 0, 4)};
  CHECK_FALSE(same_lattice(t.image_cycles, quoted));
  // The images of the listed generators of H_Z.
  for (const auto& terms : std::vector<std::vector<std::pair<std::string, long>>>{
           {{"l1", 1}, {"m3", -1}, {"l2", 1}, {"n3", 1}},
           {{"m1", 1}, {"m3", 1}},
           {{"m2", 1}, {"m3", 1}},
           {{"n1", 1}, {"n3", 1}},
           {{"n2", 1}, {"n3", 1}}})
    CHECK(lattice_coordinates(L.prime(terms), t.image_cycles));
  CHECK(L.prime({{"l1", 1}, {"m3", -1}, {"l2", 1}, {"n3", 1}}) == L.qs(0, 0, 8));
  CHECK(t.index_lower == 12);
  CHECK(t.index_upper == 24);
  CHECK(t.dual);
}

TEST_CASE("lattice inclusions and duality") {
  for (const char* name : {"graphene", "diamond", "k4", "lonsdaleite"}) {
    auto ex = load_example(name);
    auto b = cycle_basis(ex.graph);
    auto s = complement(b, ex.vanishing);
    auto t = lattice_triple(b, s);
    for (const auto& v : t.intersection) CHECK(lattice_coordinates(v, t.image_cycles));
    for (const auto& v : t.image_cycles) CHECK(lattice_coordinates(v, t.image_chains));
    IntegerMatrix pairing;
    for (const auto& a : t.intersection) {
      IntegerVector row;
      for (const auto& c : t.image_chains) {
        const Rational x = inner(a, c);
        REQUIRE(is_integral(x));
        row.push_back(x.get_num());
      }
      pairing.push_back(row);
    }
    CHECK(abs(integer_determinant(pairing)) == 1);
    CHECK(t.dual);
  }
}

TEST_CASE("trivial subgroup gives the maximal lattices") {
  auto g = load_example("graphene").graph;
  auto b = cycle_basis(g);
  auto t = lattice_triple(b, complement(b, {}));
  CHECK(same_lattice(t.intersection, b.cycles));
  CHECK(same_lattice(t.image_cycles, b.cycles));
  auto edges = projected_edges(b);
  CHECK(same_lattice(t.image_chains, {edges[b.cotree[0]], edges[b.cotree[1]]}));
  CHECK(t.index_lower == 1);
  CHECK(t.index_upper == 3);

  auto model = projected_crystal(g, b, 0, complement(b, {}), t);
  auto plain = standard_realization(g, b, 0);
  CHECK(model.offsets == plain.offsets);
  CHECK(model.edge_vectors == plain.edge_vectors);
}

TEST_CASE("lonsdaleite projected crystal") {
  Lonsdaleite L;
  auto t = lattice_triple(L.b, L.s);
  auto model = projected_crystal(L.g, L.b, 0, L.s, t);
  CHECK(model.edge_vectors[*L.g.find_edge("l1")] == L.qs(0, 0, 3));
  CHECK(model.edge_vectors[*L.g.find_edge("m1")] == L.qs(1, 0, 1));
  CHECK(model.edge_vectors[*L.g.find_edge("n1")] == L.qs(1, 0, -1));
  CHECK(model.period == t.image_cycles);
}

TEST_CASE("lonsdaleite Voronoi cell") {
  Lonsdaleite L;
  auto t = lattice_triple(L.b, L.s);
  const Chain center = project_prime(*L.ex.center_chain, L.s);
  CHECK(center == L.qs(1, 1, 3));
  auto cell = lattice_voronoi_cell(t.image_cycles, center);
  std::set<Chain> expected;
  for (long z : {-1L, 7L})
    for (auto [a, c] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})
      expected.insert(L.qs(a, c, z));
  CHECK(std::set<Chain>(cell.vertices.begin(), cell.vertices.end()) == expected);
  CHECK(cell.vertices.size() == 12);
  CHECK(cell.relevant.size() == 8);
  CHECK(lattice_cell_volume(cell) == 1);

  for (const auto& v : cell.vertices) {
    const Chain d = v - center;
    const Chain axial = (inner(d, L.q3) / inner(L.q3, L.q3)) * L.q3;
    CHECK(inner(d - axial, d - axial) == q("1/3"));
    CHECK(v - center == center - (Rational(2) * center - v));
  }
  std::set<Chain> vs(cell.vertices.begin(), cell.vertices.end());
  for (const auto& v : cell.vertices) CHECK(vs.count(Rational(2) * center - v) == 1);
}

TEST_CASE("lattice Voronoi cells: vertices are equidistant from enough lattice points") {
  Lonsdaleite L;
  auto t = lattice_triple(L.b, L.s);
  std::vector<std::pair<std::vector<Chain>, Chain>> cases;
  cases.push_back({t.image_cycles, project_prime(*L.ex.center_chain, L.s)});
  Chain e1(3), e2(3), e3(3);
  e1[0] = 1, e2[1] = 1, e3[2] = 1;
  cases.push_back({{e1, e2}, Chain(3)});
  cases.push_back({{e1 + e2, e1 - e2 + e3}, Chain(3)});
  cases.push_back({{Rational(2) * e1, e1 + Rational(3) * e2}, e2});
  for (const auto& [basis, center] : cases) {
    auto cell = lattice_voronoi_cell(basis, center);
    const std::size_t n = basis.size();
    for (const auto& v : cell.vertices) {
      // Brute force over a box of lattice translates.
      Rational best = inner(v - center, v - center);
      std::size_t ties = 0;
      std::vector<long> k(n, -4);
      while (true) {
        Chain p = center;
        for (std::size_t i = 0; i < n; ++i) p += Rational(k[i]) * basis[i];
        const Rational dist = inner(v - p, v - p);
        CHECK(dist >= best);
        if (dist == best) ++ties;
        std::size_t i = 0;
        while (i < n && k[i] == 4) k[i++] = -4;
        if (i == n) break;
        ++k[i];
      }
      CHECK(ties >= n + 1);
    }
    CHECK(lattice_cell_volume(cell) == 1);
  }
}

TEST_CASE("small lattice cells") {
  Chain v(3), e1(3), e2(3);
  v[0] = 1, v[1] = 1;
  auto seg = lattice_voronoi_cell({v}, Chain(3));
  CHECK(std::set<Chain>(seg.vertices.begin(), seg.vertices.end()) ==
        std::set<Chain>{make_rational(1, 2) * v, make_rational(-1, 2) * v});

  e1[0] = 1, e2[1] = 1;
  auto square = lattice_voronoi_cell({e1, e2}, Chain(3));
  CHECK(square.relevant.size() == 4);
  std::set<Chain> corners;
  for (long a : {-1L, 1L})
    for (long c : {-1L, 1L}) corners.insert(make_rational(a, 2) * e1 + make_rational(c, 2) * e2);
  CHECK(std::set<Chain>(square.vertices.begin(), square.vertices.end()) == corners);

  std::vector<Chain> five;
  for (std::size_t i = 0; i < 5; ++i) five.push_back(unit_chain(5, i));
  CHECK(kind_of([&] { lattice_voronoi_cell(five, Chain(5)); }) == ErrorKind::RankTooHigh);
}

TEST_CASE("lattice cell tiling reduces into the cell") {
  Lonsdaleite L;
  auto t = lattice_triple(L.b, L.s);
  auto cell = lattice_voronoi_cell(t.image_cycles, project_prime(*L.ex.center_chain, L.s));
  auto tiling = lattice_cell_tiling(cell);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    RationalVector c;
    for (int i = 0; i < 3; ++i) c.push_back(randomized::small_rational(rng));
    const Chain x = combine(L.s.basis, c, L.g.edge_count());
    CHECK(tiling.contains(tiling.reduce(x).y));
  }
}

TEST_CASE("conjecture instances") {
  Lonsdaleite L;
  const Chain center = project_prime(*L.ex.center_chain, L.s);
  auto good = verify_conjecture_instance(L.g, {L.ex.vanishing, center, 0});
  CHECK(good.ok);
  CHECK(good.genus == 3);
  CHECK(good.r <= 2);
  auto bad = verify_conjecture_instance(L.g, {L.ex.vanishing, Chain(L.g.edge_count()), 0});
  CHECK_FALSE(bad.ok);

  for (const char* name : {"graphene", "k4"}) {
    auto g = load_example(name).graph;
    auto setup = prepare_hidden_tiling(g);
    auto plain = verify_hidden_tiling(g);
    auto same = verify_conjecture_instance(g, {{}, std::nullopt, setup.base});
    CHECK(same.ok == plain.ok);
    CHECK(same.r == plain.r);
  }

  auto k4 = load_example("k4").graph;
  auto b = cycle_basis(k4);
  CHECK(kind_of([&] {
          verify_conjecture_instance(k4, {{b.cycles[0], b.cycles[1]}, std::nullopt, 0});
        }) == ErrorKind::GenusTooSmall);
}

TEST_CASE("quotient bijectivity") {
  Lonsdaleite L;
  auto lon = quotient_bijectivity(L.g, L.ex.vanishing);
  CHECK(lon.bijective);
  CHECK(lon.vertex_orbits == 4);
  CHECK(lon.edge_orbits == 8);

  auto gr = load_example("graphene").graph;
  CHECK(quotient_bijectivity(gr, {}).bijective);
  auto collapsed = quotient_bijectivity(gr, {chain(gr, {{"e1", 1}, {"e2", -1}})});
  CHECK_FALSE(collapsed.bijective);
  CHECK(collapsed.edge_orbits == 2);

  for (const auto& g : census::bridgeless_census(3, 5)) CHECK(quotient_bijectivity(g, {}).bijective);
}
