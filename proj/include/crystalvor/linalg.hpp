#pragma once

// Exact linear algebra over the rationals (GMP backed).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crystalvor {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row major

/// "p/q" with q > 0 in lowest terms, or "n" when integral.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

Rational make_rational(long numerator, long denominator = 1);

bool is_integral(const Rational& value);
Integer floor_of(const Rational& value);
Integer round_of(const Rational& value);  // ties round towards +infinity

Rational dot(const RationalVector& a, const RationalVector& b);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

std::optional<RationalMatrix> inverse(RationalMatrix a);

/// Solves the square system a x = b; empty when a is singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

Rational determinant(RationalMatrix a);

std::size_t rank(RationalMatrix rows);

/// Basis (as rows) of { x : a x = 0 }, in reduced form.
RationalMatrix nullspace(const RationalMatrix& a, std::size_t columns);

/// Exact LDL^T factorisation of a symmetric positive definite matrix:
/// x^T a x = sum_i d[i] * (x[i] + sum_{k>i} l[k][i] x[k])^2.
struct LdlFactor {
  RationalMatrix lower;  // unit lower triangular
  RationalVector diagonal;
};
std::optional<LdlFactor> ldl_decompose(const RationalMatrix& a);

}  // namespace crystalvor
