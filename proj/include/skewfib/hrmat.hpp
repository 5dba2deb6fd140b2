#pragma once

#include "skewfib/matrix.hpp"
#include "skewfib/numeric.hpp"
#include "skewfib/signed_perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skewfib::hrmat {

using IntMatrix = Matrix<Integer>;

// A family A_1,…,A_r of N×N signed permutation matrices with A_1 = I,
// A_i^T·A_i = I and A_i^T·A_j + A_j^T·A_i = 0 for i ≠ j. Such a family is
// the matrix form of a square identity of size [r, N, N].
struct HRFamily {
    std::size_t N = 0;
    std::vector<SignedPerm> matrices;  // identity first

    std::size_t r() const { return matrices.size(); }
};

// Builds a family of maximal size r = rho(N). Deterministic: generators on
// dimensions 1, 2, 4, 8 come from the classical two-square and four-square
// identities and the octonion left-multiplication table; dimension 16·M
// reuses the dimension-M generators tensored with the volume element of the
// eight-generator set on dimension 16; an odd factor repeats the dyadic
// block diagonally.
HRFamily build_hr_family(const Integer& N);

// First r_target members; invariants are inherited.
HRFamily truncate_family(const HRFamily& fam, const Integer& r_target);

std::vector<IntMatrix> dense_matrices(const HRFamily& fam);

struct VerifyReport {
    bool pass = false;
    std::string violation;  // names the first violated relation

    std::string describe() const { return pass ? "ok" : violation; }
};

// Exact verification of every family invariant on dense integer input:
// square shape, identity first, signed-permutation structure, r ≤ rho(N),
// orthogonality, anticommutation. No sampling.
VerifyReport verify_hr_family(const std::vector<IntMatrix>& matrices);
VerifyReport verify_hr_family(const HRFamily& fam);

// Evaluates c = (a_1·A_1 + … + a_r·A_r)·b exactly and decides whether
// |a|²·|b|² = |c|².
bool verify_square_identity(const HRFamily& fam, const std::vector<Rational>& a,
                            const std::vector<Rational>& b);

// The bilinear forms c themselves, for cross-checks.
std::vector<Rational> bilinear_forms(const HRFamily& fam, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b);

// Dual bookkeeping: N matrices of shape N×r with B(b) = Σ b_i·B_i of rank r
// for every b ≠ 0. When normalized, the last column of B_i is the i-th
// standard basis vector.
struct DualFamily {
    std::size_t N = 0;
    std::size_t r = 0;
    std::vector<IntMatrix> b_matrices;
    bool normalized = false;
};

// B_k[i][j] = A_j[i][k]; the columns of B(b) are the vectors A_j·b.
DualFamily dualize(const HRFamily& fam);

// Applies the invertible change of b-coordinates that maps the last column
// of B(b) to b itself. Throws internal_error if the change-of-coordinates
// map is singular or does not preserve integrality (cannot happen for
// families produced by dualize).
DualFamily normalize(const DualFamily& dual);

// B(b) = Σ b_k·B_k.
Matrix<Rational> dual_span_matrix(const DualFamily& dual, const std::vector<Rational>& b);

// c = B(b)·a, the dual route to the bilinear forms.
std::vector<Rational> dual_bilinear_forms(const DualFamily& dual, const std::vector<Rational>& b,
                                          const std::vector<Rational>& a);

// Fingerprint of the construction output; guards against accidental
// changes to the canonical generator ordering.
std::uint64_t family_fingerprint(const HRFamily& fam);

}  // namespace skewfib::hrmat
