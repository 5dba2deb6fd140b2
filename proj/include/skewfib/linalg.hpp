#pragma once

#include "skewfib/matrix.hpp"
#include "skewfib/numeric.hpp"

#include <optional>
#include <vector>

namespace skewfib {

// Rank by fraction-free (Bareiss) elimination over exact integers. Rank
// answers in this library are certificates, never numerics.
std::size_t rank(const Matrix<Integer>& m);

// Rank of a rational matrix; rows are scaled to integers first (rank is
// invariant under nonzero row scalings).
std::size_t rank(const Matrix<Rational>& m);

// Clears denominators row by row: each row is multiplied by the lcm of its
// denominators.
Matrix<Integer> cleared_rows(const Matrix<Rational>& m);

// Solves m·x = y exactly. Denominators are cleared per row, the augmented
// integer matrix is reduced fraction-free, and back substitution runs over
// rationals. Returns nullopt when m is singular.
std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& m,
                                                  const std::vector<Rational>& y);

// Exact inverse via Gauss-Jordan; nullopt when singular.
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m);

}  // namespace skewfib
