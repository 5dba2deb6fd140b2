#pragma once

#include "skewfib/signed_perm.hpp"

#include <cstddef>

namespace skewfib {

struct BasisProduct {
    std::size_t index;
    int sign;
};

// Product of basis units e_i·e_j in the Cayley-Dickson algebra of dimension
// 2^log2_dim (reals, complexes, quaternions, octonions for 0..3). Doubling
// rule on pairs: (a,b)(c,d) = (ac − d̄b, da + bc̄), conjugate (a,b) = (ā, −b).
BasisProduct cd_basis_product(unsigned log2_dim, std::size_t i, std::size_t j);

// Matrix of left multiplication x ↦ e_unit·x, a signed permutation.
SignedPerm cd_left_multiplication(unsigned log2_dim, std::size_t unit);

}  // namespace skewfib
