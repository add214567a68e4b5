#include "crystalvor/tiling.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "crystalvor/cycles.hpp"
#include "crystalvor/error.hpp"
#include "crystalvor/homology.hpp"

namespace crystalvor {

PeriodicTiling::PeriodicTiling(std::vector<Chain> lattice_basis, Chain center,
                               std::vector<Chain> normals, std::vector<Rational> offsets)
    : basis_(std::move(lattice_basis)),
      center_(std::move(center)),
      normals_(std::move(normals)),
      offsets_(std::move(offsets)),
      search_(gram_of(basis_)) {}

RationalVector PeriodicTiling::coordinates(const Chain& x) const {
  auto c = span_coordinates(x, basis_);
  if (!c) throw Error(ErrorKind::NotInH, "point outside the tiled subspace");
  return *c;
}

Chain PeriodicTiling::lattice_vector(const IntegerVector& h) const {
  RationalVector c(h.begin(), h.end());
  return combine(basis_, c, center_.size());
}

std::vector<IntegerVector> PeriodicTiling::nearest(const Chain& x) const {
  return search_.closest(coordinates(x - center_)).second;
}

ReducedPoint PeriodicTiling::reduce(const Chain& x) const {
  auto ties = nearest(x);
  const RationalVector origin(dimension());
  auto best = std::min_element(ties.begin(), ties.end(), [&](const auto& p, const auto& q) {
    const Rational np = search_.distance_squared(p, origin), nq = search_.distance_squared(q, origin);
    if (np != nq) return np < nq;
    return p < q;
  });
  ReducedPoint r{*best, x - lattice_vector(*best)};
  return r;
}

bool PeriodicTiling::contains(const Chain& y) const {
  for (std::size_t k = 0; k < normals_.size(); ++k)
    if (inner(normals_[k], y) > offsets_[k]) return false;
  return true;
}

std::vector<std::size_t> PeriodicTiling::tight(const Chain& y) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < normals_.size(); ++k)
    if (inner(normals_[k], y) == offsets_[k]) out.push_back(k);
  return out;
}

std::size_t PeriodicTiling::face_dimension(const std::vector<std::size_t>& tight) const {
  RationalMatrix rows;
  for (auto k : tight) rows.push_back(normals_[k].values());
  return dimension() - std::min(dimension(), rank(rows));
}

std::vector<Piece> PeriodicTiling::walk(const Chain& a, const Chain& b) const {
  const Chain d = b - a;
  std::vector<Piece> out;
  Rational t = 0;
  while (true) {
    const Chain x = a + t * d;
    // Among translates whose cell contains x, take the one the segment
    // enters: smallest directional derivative of |x - center - h|^2.
    auto ties = nearest(x);
    const RationalVector origin(dimension());
    std::vector<std::tuple<Rational, Rational, IntegerVector>> ranked;
    for (auto& h : ties)
      ranked.emplace_back(inner(x - center_ - lattice_vector(h), d),
                          search_.distance_squared(h, origin), h);
    std::sort(ranked.begin(), ranked.end());
    const IntegerVector h = std::get<2>(ranked.front());
    const Chain y = x - lattice_vector(h);
    if (!contains(y)) throw Error(ErrorKind::NotInCell, "internal error: reduced point outside cell");
    Rational exit = 1;
    for (std::size_t k = 0; k < normals_.size(); ++k) {
      const Rational slope = inner(normals_[k], d);
      if (sgn(slope) <= 0) continue;
      const Rational s = t + (offsets_[k] - inner(normals_[k], y)) / slope;
      if (s < exit) exit = s;
    }
    if (d.is_zero()) exit = 1;
    if (exit <= t && !d.is_zero())
      throw Error(ErrorKind::NotInCell, "internal error: segment does not advance");
    Piece p;
    p.t0 = t;
    p.t1 = exit;
    p.h = h;
    p.y0 = y;
    p.y1 = y + (exit - t) * d;
    const Rational half(1, 2);
    p.tight = tight(y + (half * (exit - t)) * d);
    p.face_dimension = face_dimension(p.tight);
    out.push_back(std::move(p));
    if (exit >= 1) break;
    t = exit;
  }
  return out;
}

VerificationReport verify_segments(const PeriodicTiling& tiling,
                                   const std::vector<Segment>& segments) {
  std::vector<std::vector<PieceReport>> results(segments.size());
  auto check = [&](std::size_t i) {
    const auto& s = segments[i];
    if (s.a == s.b) return;
    const Chain d = s.b - s.a;
    for (auto& p : tiling.walk(s.a, s.b)) {
      PieceReport r;
      r.a = s.a + p.t0 * d;
      r.b = s.a + p.t1 * d;
      r.edge = s.edge;
      r.translate = p.h;
      r.face_dimension = p.face_dimension;
      for (auto k : p.tight) {
        // A supporting hyperplane through the midpoint contains the piece.
        const auto& n = tiling.normals()[k];
        if (inner(n, p.y0) == tiling.offsets()[k] && inner(n, p.y1) == tiling.offsets()[k]) {
          r.witness = k;
          break;
        }
      }
      results[i].push_back(std::move(r));
    }
  };
  const std::size_t workers = std::min(configured_threads(), std::max<std::size_t>(1, segments.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < segments.size(); ++i) check(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < segments.size(); i += workers) check(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  VerificationReport report;
  report.genus = tiling.dimension();
  for (auto& part : results) {
    for (auto& r : part) {
      report.r = std::max(report.r, r.face_dimension);
      if (!r.witness) report.ok = false;
      report.segments.push_back(std::move(r));
    }
  }
  if (report.r + 1 > tiling.dimension()) report.ok = false;
  return report;
}

}  // namespace crystalvor
