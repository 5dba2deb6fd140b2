#pragma once

#include "skewfib/matrix.hpp"
#include "skewfib/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace skewfib {

// Signed permutation matrix in compact form: column c has its single
// nonzero entry, sign_of_col[c] ∈ {−1, +1}, in row row_of_col[c].
// Products, transposes and Kronecker products of signed permutations stay
// signed permutations, so family construction runs in O(N) per operation
// instead of O(N^3) dense products.
struct SignedPerm {
    std::vector<std::size_t> row_of_col;
    std::vector<int> sign_of_col;

    std::size_t size() const { return row_of_col.size(); }

    static SignedPerm identity(std::size_t n);

    SignedPerm transposed() const;
    SignedPerm negated() const;

    bool operator==(const SignedPerm& o) const = default;
    bool is_identity() const;

    Matrix<Integer> to_dense() const;

    // Canonical serialization for fingerprints.
    std::string canonical_string() const;
};

// a·b as linear maps (apply b first).
SignedPerm product(const SignedPerm& a, const SignedPerm& b);

SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b);

// Extracts the compact form if the matrix is a signed permutation (exactly
// one ±1 in every row and column, all other entries zero).
std::optional<SignedPerm> as_signed_perm(const Matrix<Integer>& m);

}  // namespace skewfib
