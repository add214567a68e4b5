#include "crystalvor/cell.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crystalvor/error.hpp"

namespace crystalvor {

namespace {

void require_bridgeless(const MultiGraph& g) {
  auto bridges = find_bridges(g);
  if (bridges.empty()) return;
  std::string ids;
  for (auto j : bridges) ids += (ids.empty() ? "" : ", ") + g.edge(j).id;
  throw Error(ErrorKind::BridgeExists, "bridges: " + ids);
}

std::size_t tight_rank(const std::vector<HalfSpace>& hs, const Chain& p) {
  RationalMatrix rows;
  for (const auto& h : hs)
    if (inner(h.normal.chain, p) == h.offset) rows.push_back(h.normal.chain.values());
  return rank(rows);
}

}  // namespace

std::vector<HalfSpace> cell_halfspaces(const MultiGraph& g) {
  require_bridgeless(g);
  std::vector<HalfSpace> out;
  for (auto& c : enumerate_elementary_cycles(g)) {
    const long offset = static_cast<long>(c.plus_count());
    out.push_back({std::move(c), offset});
  }
  return out;
}

std::vector<CellVertex> cell_vertices(const MultiGraph& g, const CycleBasis& basis,
                                      const std::vector<HalfSpace>& halfspaces,
                                      std::size_t orientation_guard) {
  std::vector<CellVertex> out;
  std::set<Chain> seen;
  for (auto& o : enumerate_strong_orientations(g, orientation_guard)) {
    std::vector<EdgeIndex> q;
    for (EdgeIndex j = 0; j < g.edge_count(); ++j)
      if (o.signs[j] == 1) q.push_back(j);
    Chain p = project(edge_sum(g.edge_count(), q), basis);
    if (!seen.insert(p).second) continue;
    for (const auto& h : halfspaces)
      if (inner(h.normal.chain, p) > h.offset)
        throw Error(ErrorKind::NotInCell, "internal error: orientation vertex violates a facet");
    if (tight_rank(halfspaces, p) < basis.genus())
      throw Error(ErrorKind::NotInCell, "internal error: orientation point is not a vertex");
    out.push_back({std::move(p), std::move(q), std::move(o)});
  }
  return out;
}

VoronoiCell build_cell(const MultiGraph& g, std::size_t orientation_guard) {
  VoronoiCell cell;
  cell.halfspaces = cell_halfspaces(g);
  cell.basis = cycle_basis(g);
  cell.dim = cell.basis.genus();
  cell.vertices = cell_vertices(g, cell.basis, cell.halfspaces, orientation_guard);
  Chain all(g.edge_count());
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) all[j] = Rational(1, 2);
  cell.center = project(all, cell.basis);
  return cell;
}

PeriodicTiling cell_tiling(const VoronoiCell& cell) {
  std::vector<Chain> normals;
  std::vector<Rational> offsets;
  for (const auto& h : cell.halfspaces) {
    normals.push_back(h.normal.chain);
    offsets.emplace_back(h.offset);
  }
  return PeriodicTiling(cell.basis.cycles, cell.center, std::move(normals), std::move(offsets));
}

Rational support_function(const MultiGraph& g, const Chain& u) {
  if (u.size() != g.edge_count() || !in_cycle_space(g, u))
    throw Error(ErrorKind::NotInH, "support function argument is not a cycle");
  Rational s = 0;
  for (const auto& v : u)
    if (sgn(v) > 0) s += v;
  return s;
}

ReducedPoint reduce_point(const VoronoiCell& cell, const Chain& x) {
  return cell_tiling(cell).reduce(x);
}

std::vector<std::size_t> tight_halfspaces(const VoronoiCell& cell, const Chain& y) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cell.halfspaces.size(); ++k) {
    const Rational v = inner(cell.halfspaces[k].normal.chain, y);
    if (v > cell.halfspaces[k].offset) throw Error(ErrorKind::NotInCell, "point outside the cell");
    if (v == cell.halfspaces[k].offset) out.push_back(k);
  }
  return out;
}

std::vector<HalfSpace> facets_containing(const VoronoiCell& cell, const Chain& y) {
  std::vector<HalfSpace> out;
  for (auto k : tight_halfspaces(cell, y)) out.push_back(cell.halfspaces[k]);
  return out;
}

std::size_t face_dimension(const VoronoiCell& cell, std::span<const Chain> points) {
  std::vector<std::size_t> common;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto t = tight_halfspaces(cell, points[i]);
    if (i == 0) {
      common = std::move(t);
    } else {
      std::vector<std::size_t> both;
      std::set_intersection(common.begin(), common.end(), t.begin(), t.end(), std::back_inserter(both));
      common = std::move(both);
    }
  }
  RationalMatrix rows;
  for (auto k : common) rows.push_back(cell.halfspaces[k].normal.chain.values());
  return cell.dim - std::min(cell.dim, rank(rows));
}

namespace {

class PullingTriangulation {
 public:
  PullingTriangulation(std::vector<RationalVector> points, std::vector<std::vector<bool>> incidence)
      : points_(std::move(points)), incidence_(std::move(incidence)) {}

  Rational volume(std::size_t dim) {
    std::vector<std::size_t> all(points_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> apexes;
    total_ = 0;
    visit(all, dim, apexes);
    Rational factorial = 1;
    for (std::size_t k = 2; k <= dim; ++k) factorial *= static_cast<long>(k);
    return total_ / factorial;
  }

 private:
  std::size_t affine_dimension(const std::vector<std::size_t>& face) {
    auto it = dims_.find(face);
    if (it != dims_.end()) return it->second;
    RationalMatrix rows;
    for (std::size_t i = 1; i < face.size(); ++i) {
      RationalVector r(points_[face[i]]);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= points_[face[0]][k];
      rows.push_back(std::move(r));
    }
    const std::size_t d = rank(rows);
    dims_.emplace(face, d);
    return d;
  }

  void visit(const std::vector<std::size_t>& face, std::size_t dim, std::vector<std::size_t>& apexes) {
    if (dim == 0) {
      RationalMatrix m;
      const auto& base = points_[face.front()];
      for (auto a : apexes) {
        RationalVector r(points_[a]);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= base[k];
        m.push_back(std::move(r));
      }
      total_ += abs(determinant(std::move(m)));
      return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> facets;
    for (const auto& row : incidence_) {
      if (row[apex]) continue;
      std::vector<std::size_t> sub;
      for (auto v : face)
        if (row[v]) sub.push_back(v);
      if (sub.size() < dim || sub.size() == face.size()) continue;
      if (affine_dimension(sub) == dim - 1) facets.insert(std::move(sub));
    }
    apexes.push_back(apex);
    for (const auto& f : facets) visit(f, dim - 1, apexes);
    apexes.pop_back();
  }

  std::vector<RationalVector> points_;
  std::vector<std::vector<bool>> incidence_;  // halfspace -> vertex tight
  std::map<std::vector<std::size_t>, std::size_t> dims_;
  Rational total_ = 0;
};

}  // namespace

Rational coordinate_volume(const VoronoiCell& cell) {
  if (cell.dim == 0) return 1;
  std::vector<RationalVector> points;
  for (const auto& v : cell.vertices) points.push_back(cycle_coordinates(v.point, cell.basis));
  std::vector<std::vector<bool>> incidence;
  for (const auto& h : cell.halfspaces) {
    std::vector<bool> row;
    for (const auto& v : cell.vertices) row.push_back(inner(h.normal.chain, v.point) == h.offset);
    incidence.push_back(std::move(row));
  }
  return polytope_volume(std::move(points), std::move(incidence), cell.dim);
}

Rational polytope_volume(std::vector<RationalVector> points,
                         std::vector<std::vector<bool>> incidence, std::size_t dim) {
  return PullingTriangulation(std::move(points), std::move(incidence)).volume(dim);
}

}  // namespace crystalvor
