#include "crystalvor/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "crystalvor/error.hpp"

namespace crystalvor {

namespace {

// Unimodular row operations bringing the first `reduce_columns` columns into
// echelon form. Returns the number of pivot rows.
std::size_t integer_echelon(IntegerMatrix& m, std::size_t reduce_columns) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < reduce_columns && row < m.size(); ++col) {
    for (;;) {
      std::size_t pick = m.size();
      for (std::size_t i = row; i < m.size(); ++i) {
        if (sgn(m[i][col]) == 0) continue;
        if (pick == m.size() || abs(m[i][col]) < abs(m[pick][col])) pick = i;
      }
      if (pick == m.size()) break;
      std::swap(m[row], m[pick]);
      bool done = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (sgn(m[i][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[row][j];
        if (sgn(m[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (row < m.size() && sgn(m[row][col]) != 0) {
      if (sgn(m[row][col]) < 0)
        for (auto& x : m[row]) x = -x;
      for (std::size_t i = 0; i < row; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[row][j];
      }
      ++row;
    }
  }
  return row;
}

}  // namespace

IntegerMatrix hermite_row_basis(IntegerMatrix rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows[0].size();
  const std::size_t r = integer_echelon(rows, n);
  rows.resize(r);
  return rows;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a, std::size_t columns) {
  const std::size_t k = a.size();
  IntegerMatrix m(columns, IntegerVector(k + columns, 0));
  for (std::size_t i = 0; i < columns; ++i) {
    for (std::size_t r = 0; r < k; ++r) m[i][r] = a[r][i];
    m[i][k + i] = 1;
  }
  const std::size_t pivots = integer_echelon(m, k);
  IntegerMatrix kernel;
  for (std::size_t i = pivots; i < m.size(); ++i)
    kernel.emplace_back(m[i].begin() + static_cast<std::ptrdiff_t>(k), m[i].end());
  return hermite_row_basis(std::move(kernel));
}

Integer integer_determinant(const IntegerMatrix& a) {
  RationalMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) r[i].emplace_back(x);
  const Rational d = determinant(std::move(r));
  return d.get_num();
}

LatticeSearch::LatticeSearch(RationalMatrix gram) : gram_(std::move(gram)) {
  auto f = ldl_decompose(gram_);
  if (!f) throw Error(ErrorKind::Malformed, "lattice Gram matrix is not positive definite");
  ldl_ = std::move(*f);
}

Rational LatticeSearch::distance_squared(const IntegerVector& h,
                                         const RationalVector& target) const {
  const std::size_t n = dimension();
  RationalVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = Rational(h[i]) - target[i];
  Rational q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(z[i]) != 0 && sgn(z[j]) != 0) q += z[i] * gram_[i][j] * z[j];
  return q;
}

template <class Visit>
void LatticeSearch::enumerate(const RationalVector& target, Rational& radius,
                              Visit&& visit) const {
  const std::size_t n = dimension();
  IntegerVector h(n);
  RationalVector z(n);  // h - target
  // Depth-first from the last coordinate; radius may shrink during the walk.
  auto recurse = [&](auto&& self, std::size_t level, const Rational& partial) -> void {
    const std::size_t i = level - 1;
    Rational shift = 0;
    for (std::size_t k = i + 1; k < n; ++k) shift += ldl_.lower[k][i] * z[k];
    const Rational center = target[i] - shift;
    const Rational room = (radius - partial) / ldl_.diagonal[i];
    if (sgn(room) < 0) return;
    const double c = center.get_d();
    const double w = std::sqrt(std::max(0.0, room.get_d()));
    const long lo = static_cast<long>(std::floor(c - w)) - 1;
    const long hi = static_cast<long>(std::ceil(c + w)) + 1;
    for (long v = lo; v <= hi; ++v) {
      const Rational diff = Rational(v) - center;
      const Rational next = partial + ldl_.diagonal[i] * diff * diff;
      if (next > radius) continue;
      h[i] = v;
      z[i] = Rational(v) - target[i];
      if (i == 0) {
        visit(h, next);
      } else {
        self(self, i, next);
      }
    }
  };
  if (n == 0) {
    visit(h, Rational(0));
    return;
  }
  recurse(recurse, n, Rational(0));
}

std::pair<Rational, std::vector<IntegerVector>> LatticeSearch::closest(
    const RationalVector& target) const {
  IntegerVector start(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) start[i] = round_of(target[i]);
  Rational radius = distance_squared(start, target);
  std::vector<IntegerVector> best;
  enumerate(target, radius, [&](const IntegerVector& h, const Rational& q) {
    if (q < radius) {
      radius = q;
      best.clear();
    }
    best.push_back(h);
  });
  // Points recorded before the radius settled may be worse than the minimum.
  std::vector<IntegerVector> ties;
  for (auto& h : best)
    if (distance_squared(h, target) == radius) ties.push_back(std::move(h));
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  return {radius, std::move(ties)};
}

std::vector<IntegerVector> LatticeSearch::within(const RationalVector& target,
                                                 const Rational& radius_squared) const {
  Rational radius = radius_squared;
  std::vector<IntegerVector> out;
  enumerate(target, radius, [&](const IntegerVector& h, const Rational&) { out.push_back(h); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystalvor
