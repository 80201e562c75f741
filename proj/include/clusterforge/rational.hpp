#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cf {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Checked int64 arithmetic; throws Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Solves A x = b exactly for square A (row-major, n x n). Returns false when A
// is singular.
bool solve_exact(int n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                 std::vector<Rational>& x);

// Rank of an r x c matrix (row-major) over Q.
int rank_exact(int rows, int cols, std::vector<Rational> a);

// Determinant of a square integer matrix (row-major), exact.
Integer determinant(int n, const std::vector<std::int64_t>& a);

}  // namespace cf
