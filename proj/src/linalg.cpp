#include "crystalvor/linalg.hpp"

#include <utility>

#include "crystalvor/error.hpp"

namespace crystalvor {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Malformed, "empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::Malformed, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::Malformed, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer round_of(const Rational& value) { return floor_of(value + Rational(1, 2)); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix t(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  RationalMatrix c(a.size(), RationalVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  RationalVector y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

namespace {

// Reduces a to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && sgn(a[pick][col]) == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const Rational inv = 1 / a[row][col];
    const std::size_t width = a[row].size();
    for (std::size_t j = col; j < width; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < width; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalMatrix> inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, 0);
    a[i][n + i] = 1;
  }
  auto pivots = row_reduce(a, n);
  if (pivots.size() != n) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, n);
  if (pivots.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && sgn(a[pick][col]) == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      std::swap(a[pick], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  return row_reduce(rows, rows[0].size()).size();
}

RationalMatrix nullspace(const RationalMatrix& a, std::size_t columns) {
  RationalMatrix r = a;
  auto pivots = row_reduce(r, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LdlFactor> ldl_decompose(const RationalMatrix& a) {
  const std::size_t n = a.size();
  LdlFactor f{identity_matrix(n), RationalVector(n, 0)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diagonal[k];
    if (sgn(d) <= 0) return std::nullopt;
    f.diagonal[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diagonal[k];
      f.lower[i][j] = s / d;
    }
  }
  return f;
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BridgeExists: return "BridgeExists";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInH: return "NotInH";
    case ErrorKind::NotInCell: return "NotInCell";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::RankTooHigh: return "RankTooHigh";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::IO: return "IO";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace crystalvor
