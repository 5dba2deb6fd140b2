#pragma once

#include "skewfib/numeric.hpp"

#include <string>
#include <vector>

namespace skewfib::hrcore {

struct DyadicDecomposition {
    Integer exponent;  // the power of two
    Integer odd_part;  // always odd

    bool operator==(const DyadicDecomposition&) const = default;
};

// N = 2^exponent · odd_part. Rejects N = 0.
DyadicDecomposition dyadic_decompose(const Integer& n);

// The Hurwitz-Radon function. Depends only on the dyadic part: for
// N = 2^k·odd, the value is 2k+1, 2k, 2k, 2k+2 as k ≡ 0,1,2,3 (mod 4).
// Rejects N = 0. No cap on N.
Integer rho(const Integer& n);

struct DimensionPair {
    Integer fiber_dim;    // p ≥ 1
    Integer ambient_dim;  // n > p
};

// A fibration of R^n by pairwise skew p-dimensional affine subspaces exists
// iff p ≤ rho(n−p)−1. Rejects p = 0 and n ≤ p.
bool exists_fibration(const DimensionPair& pair);

// An admissible pair is dominant when (p+1, n+1) is not admissible;
// since n−p is unchanged this is exactly p = rho(n−p)−1.
// Rejects non-admissible pairs.
bool is_dominant(const DimensionPair& pair);

// All p ≥ 1 admissible for ambient dimension n, ascending. Empty when no
// fiber dimension works (e.g. powers of two, n = 80).
std::vector<Integer> admissible_set(const Integer& n);

struct TableRow {
    Integer n;
    std::vector<Integer> admissible;  // ascending
    std::vector<Integer> dominant;    // ascending subset of admissible

    bool operator==(const TableRow&) const = default;
};

std::vector<TableRow> build_table(const Integer& n_min, const Integer& n_max);

enum class TableFormat { text, tsv, json };

// One row per n; dominant entries are starred in text form, listed in tsv
// form, and reported as the largest dominant entry (or null) in json form.
std::string render_table(const Integer& n_min, const Integer& n_max, TableFormat format);

}  // namespace skewfib::hrcore
