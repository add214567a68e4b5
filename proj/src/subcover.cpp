#include "crystalvor/subcover.hpp"

#include <algorithm>
#include <set>

#include "crystalvor/error.hpp"

namespace crystalvor {

Subspace complement(const CycleBasis& b, const std::vector<Chain>& generators) {
  Subspace s;
  s.generators = generators;
  RationalMatrix constraints;
  for (const auto& l : generators) {
    if (!lattice_coordinates(l, b.cycles))
      throw Error(ErrorKind::NotInH, "vanishing generator is not an integer cycle");
    RationalVector row;
    for (const auto& c : b.cycles) row.push_back(inner(l, c));
    constraints.push_back(std::move(row));
  }
  for (const auto& c : nullspace(constraints, b.genus())) s.basis.push_back(from_cycle_coordinates(c, b));
  s.gram = gram_of(s.basis);
  s.gram_inverse = s.basis.empty() ? RationalMatrix{} : *inverse(s.gram);
  return s;
}

std::vector<Chain> generators_from_coordinates(const CycleBasis& b,
                                               const std::vector<IntegerVector>& coordinates) {
  std::vector<Chain> out;
  for (const auto& c : coordinates) {
    if (c.size() != b.genus())
      throw Error(ErrorKind::Usage, "vanishing generator needs " + std::to_string(b.genus()) + " coordinates");
    out.push_back(from_cycle_coordinates(RationalVector(c.begin(), c.end()), b));
  }
  return out;
}

Chain project_prime(const Chain& x, const Subspace& s) {
  if (s.basis.empty()) return Chain(x.size());
  RationalVector pairing;
  for (const auto& v : s.basis) pairing.push_back(inner(v, x));
  return combine(s.basis, multiply(s.gram_inverse, pairing), x.size());
}

std::vector<Chain> image_lattice_basis(const std::vector<Chain>& generators, const Subspace& s) {
  if (s.basis.empty()) return {};
  std::vector<RationalVector> coords;
  Integer denominator = 1;
  for (const auto& v : generators) {
    auto c = span_coordinates(v, s.basis);
    if (!c) throw Error(ErrorKind::NotInH, "vector outside E'");
    for (const auto& x : *c) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), x.get_den_mpz_t());
    coords.push_back(std::move(*c));
  }
  IntegerMatrix rows;
  for (const auto& c : coords) {
    IntegerVector r;
    for (const auto& x : c) r.push_back(Rational(x * Rational(denominator)).get_num());
    rows.push_back(std::move(r));
  }
  std::vector<Chain> out;
  for (const auto& r : hermite_row_basis(std::move(rows))) {
    RationalVector c;
    for (const auto& x : r) c.push_back(Rational(x) / Rational(denominator));
    out.push_back(combine(s.basis, c, s.basis.front().size()));
  }
  return out;
}

namespace {

Integer index_of(const std::vector<Chain>& sub, const std::vector<Chain>& super) {
  RationalMatrix m;
  for (const auto& v : sub) {
    auto c = lattice_coordinates(v, super);
    if (!c) throw Error(ErrorKind::NotInH, "internal error: lattice inclusion fails");
    m.emplace_back(c->begin(), c->end());
  }
  if (m.empty()) return 1;
  return Rational(abs(determinant(std::move(m)))).get_num();
}

}  // namespace

LatticeTriple lattice_triple(const CycleBasis& b, const Subspace& s) {
  LatticeTriple t;
  const std::size_t m = b.edge_count;
  if (s.basis.empty()) {
    t.dual = true;
    return t;
  }
  IntegerMatrix constraints;
  for (const auto& l : s.generators) {
    IntegerVector row;
    for (const auto& c : b.cycles) row.push_back(inner(l, c).get_num());
    constraints.push_back(std::move(row));
  }
  for (const auto& k : integer_kernel(constraints, b.genus()))
    t.intersection.push_back(from_cycle_coordinates(RationalVector(k.begin(), k.end()), b));
  std::vector<Chain> cycles, chains;
  for (const auto& c : b.cycles) cycles.push_back(project_prime(c, s));
  for (EdgeIndex j = 0; j < m; ++j) chains.push_back(project_prime(unit_chain(m, j), s));
  t.image_cycles = image_lattice_basis(cycles, s);
  t.image_chains = image_lattice_basis(chains, s);
  t.gram_intersection = gram_of(t.intersection);
  t.gram_image_cycles = gram_of(t.image_cycles);
  t.gram_image_chains = gram_of(t.image_chains);
  t.index_lower = index_of(t.intersection, t.image_cycles);
  t.index_upper = index_of(t.image_cycles, t.image_chains);
  RationalMatrix pairing;
  bool integral = true;
  for (const auto& x : t.intersection) {
    RationalVector row;
    for (const auto& y : t.image_chains) {
      row.push_back(inner(x, y));
      integral = integral && is_integral(row.back());
    }
    pairing.push_back(std::move(row));
  }
  t.dual = integral && pairing.size() == t.image_chains.size() && abs(determinant(pairing)) == 1;
  return t;
}

CrystalModel projected_crystal(const MultiGraph& g, const CycleBasis& b, VertexIndex v0,
                               const Subspace& s, const LatticeTriple& t) {
  CrystalModel m = standard_realization(g, b, v0);
  for (auto& x : m.offsets) x = project_prime(x, s);
  for (auto& x : m.edge_vectors) x = project_prime(x, s);
  m.period = t.image_cycles;
  return m;
}

LatticeCell lattice_voronoi_cell(const std::vector<Chain>& lattice_basis, const Chain& center) {
  const std::size_t n = lattice_basis.size();
  if (n > max_lattice_cell_rank)
    throw Error(ErrorKind::RankTooHigh, "lattice rank " + std::to_string(n) + " exceeds " +
                                            std::to_string(max_lattice_cell_rank));
  LatticeCell cell;
  cell.center = center;
  cell.lattice_basis = lattice_basis;
  if (n == 0) {
    cell.vertices.push_back(center);
    return cell;
  }
  const RationalMatrix gram = gram_of(lattice_basis);
  const LatticeSearch search(gram);
  std::vector<IntegerVector> relevant;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    RationalVector target(n);
    for (std::size_t a = 0; a < n; ++a) target[a] = ((mask >> a) & 1U) ? Rational(-1, 2) : Rational(0);
    auto ties = search.closest(target).second;
    if (ties.size() != 2) continue;
    for (const auto& k : ties) {
      IntegerVector v(n);
      for (std::size_t a = 0; a < n; ++a) v[a] = Integer(2) * k[a] + Integer((mask >> a) & 1U);
      relevant.push_back(std::move(v));
    }
  }
  std::sort(relevant.begin(), relevant.end());
  // Work in lattice coordinates: x = center + sum y_a b_a.
  std::vector<RationalVector> normals;  // G v
  std::vector<Rational> bounds;         // (v, v) / 2
  for (const auto& v : relevant) {
    RationalVector rv(v.begin(), v.end());
    RationalVector gv = multiply(gram, rv);
    bounds.push_back(dot(rv, gv) / 2);
    normals.push_back(std::move(gv));
    Chain chain = combine(lattice_basis, rv, center.size());
    cell.offsets.push_back(inner(center, chain) + bounds.back());
    cell.relevant.push_back(std::move(chain));
  }
  std::set<RationalVector> found;
  std::vector<std::size_t> pick(n);
  auto choose = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == n) {
      RationalMatrix a;
      RationalVector rhs;
      for (auto k : pick) {
        a.push_back(normals[k]);
        rhs.push_back(bounds[k]);
      }
      auto y = solve(std::move(a), std::move(rhs));
      if (!y) return;
      for (std::size_t k = 0; k < normals.size(); ++k)
        if (dot(normals[k], *y) > bounds[k]) return;
      found.insert(std::move(*y));
      return;
    }
    for (std::size_t k = from; k < normals.size(); ++k) {
      pick[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  choose(choose, 0, 0);
  for (const auto& y : found) {
    // Central symmetry about the center.
    RationalVector minus(y);
    for (auto& v : minus) v = -v;
    if (found.count(minus) == 0)
      throw Error(ErrorKind::Malformed, "internal error: Voronoi cell is not centrally symmetric");
    cell.vertices.push_back(center + combine(lattice_basis, y, center.size()));
  }
  return cell;
}

PeriodicTiling lattice_cell_tiling(const LatticeCell& cell) {
  return PeriodicTiling(cell.lattice_basis, cell.center, cell.relevant, cell.offsets);
}

Rational lattice_cell_volume(const LatticeCell& cell) {
  const std::size_t n = cell.lattice_basis.size();
  if (n == 0) return 1;
  std::vector<RationalVector> points;
  for (const auto& v : cell.vertices) points.push_back(*span_coordinates(v - cell.center, cell.lattice_basis));
  std::vector<std::vector<bool>> incidence;
  for (std::size_t k = 0; k < cell.relevant.size(); ++k) {
    std::vector<bool> row;
    for (const auto& v : cell.vertices) row.push_back(inner(cell.relevant[k], v) == cell.offsets[k]);
    incidence.push_back(std::move(row));
  }
  return polytope_volume(points, incidence, n);
}

VerificationReport verify_conjecture_instance(const MultiGraph& g, const ConjectureInput& input) {
  const CycleBasis b = cycle_basis(g);
  const Subspace s = complement(b, input.generators);
  if (s.dimension() < 2)
    throw Error(ErrorKind::GenusTooSmall, "dim E' = " + std::to_string(s.dimension()) + "; need at least 2");
  const LatticeTriple t = lattice_triple(b, s);
  const CrystalModel model = projected_crystal(g, b, input.base, s, t);
  Chain center;
  if (input.center) {
    center = *input.center;
    if (!(project_prime(center, s) == center)) throw Error(ErrorKind::NotInH, "center is not in E'");
  } else {
    Chain half(g.edge_count());
    for (EdgeIndex j = 0; j < g.edge_count(); ++j) half[j] = Rational(1, 2);
    center = project_prime(half, s);
  }
  const LatticeCell cell = lattice_voronoi_cell(t.image_cycles, center);
  VerificationReport report = verify_segments(lattice_cell_tiling(cell), fundamental_segments(model, g));
  report.base_vertex = g.vertex_label(input.base);
  return report;
}

Bijectivity quotient_bijectivity(const MultiGraph& g, const std::vector<Chain>& generators) {
  const CycleBasis b = cycle_basis(g);
  const Subspace s = complement(b, generators);
  const LatticeTriple t = lattice_triple(b, s);
  const CrystalModel model = projected_crystal(g, b, 0, s, t);
  Bijectivity r;
  std::tie(r.vertex_orbits, r.edge_orbits) = orbit_counts(model, g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.bijective = r.vertex_orbits == r.vertices && r.edge_orbits == r.edges;
  return r;
}

std::vector<Chain> search_centers(const MultiGraph& g, const std::vector<Chain>& generators,
                                  VertexIndex base) {
  const CycleBasis b = cycle_basis(g);
  const Subspace s = complement(b, generators);
  const LatticeTriple t = lattice_triple(b, s);
  const std::size_t n = t.image_chains.size();
  // Half-lattice points of pi'(Lambda) in a box wide enough to meet every
  // class modulo pi'(H_Z), reduced to one representative per class.
  const PeriodicTiling classes(t.image_cycles, Chain(g.edge_count()), {}, {});
  std::set<Chain> representatives;
  const long span = 2 * static_cast<long>(t.index_upper.get_si());
  std::vector<long> k(n, 0);
  while (true) {
    RationalVector c;
    for (auto v : k) c.emplace_back(v, 2);
    const Chain x = combine(t.image_chains, c, g.edge_count());
    representatives.insert(classes.reduce(x).y);
    std::size_t i = 0;
    while (i < n && k[i] == span - 1) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  std::vector<Chain> out;
  for (const auto& center : representatives) {
    ConjectureInput input{generators, center, base};
    if (verify_conjecture_instance(g, input).ok) out.push_back(center);
  }
  return out;
}

}  // namespace crystalvor
