#include "skewfib/cayley_dickson.hpp"

#include "skewfib/error.hpp"

namespace skewfib {

namespace {

// Conjugation flips the sign of every non-real basis unit.
int conj_sign(std::size_t i) { return i == 0 ? 1 : -1; }

}  // namespace

BasisProduct cd_basis_product(unsigned log2_dim, std::size_t i, std::size_t j) {
    const std::size_t dim = std::size_t(1) << log2_dim;
    if (i >= dim || j >= dim) throw structural_error("basis index out of range");
    if (log2_dim == 0) return {0, 1};
    const std::size_t half = dim >> 1;
    const bool ih = i >= half, jh = j >= half;
    const std::size_t il = i & (half - 1), jl = j & (half - 1);
    if (!ih && !jh) {  // (x,0)(y,0) = (xy, 0)
        return cd_basis_product(log2_dim - 1, il, jl);
    }
    if (!ih && jh) {  // (x,0)(0,y) = (0, yx)
        BasisProduct p = cd_basis_product(log2_dim - 1, jl, il);
        return {p.index + half, p.sign};
    }
    if (ih && !jh) {  // (0,x)(y,0) = (0, x·ȳ)
        BasisProduct p = cd_basis_product(log2_dim - 1, il, jl);
        return {p.index + half, p.sign * conj_sign(jl)};
    }
    // (0,x)(0,y) = (−ȳx, 0)
    BasisProduct p = cd_basis_product(log2_dim - 1, jl, il);
    return {p.index, -p.sign * conj_sign(jl)};
}

SignedPerm cd_left_multiplication(unsigned log2_dim, std::size_t unit) {
    const std::size_t dim = std::size_t(1) << log2_dim;
    SignedPerm m;
    m.row_of_col.resize(dim);
    m.sign_of_col.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const BasisProduct p = cd_basis_product(log2_dim, unit, j);
        m.row_of_col[j] = p.index;
        m.sign_of_col[j] = p.sign;
    }
    return m;
}

}  // namespace skewfib
