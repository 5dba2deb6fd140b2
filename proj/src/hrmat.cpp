#include "skewfib/hrmat.hpp"

#include "skewfib/cayley_dickson.hpp"
#include "skewfib/error.hpp"
#include "skewfib/hrcore.hpp"
#include "skewfib/linalg.hpp"

#include <sstream>

namespace skewfib::hrmat {

namespace {

SignedPerm make_perm(std::vector<std::size_t> rows, std::vector<int> signs) {
    SignedPerm p;
    p.row_of_col = std::move(rows);
    p.sign_of_col = std::move(signs);
    return p;
}

// Anticommuting complex structures (E² = −I, Eᵀ = −E) read off the
// two-square identity of Diophantus/Brahmagupta.
std::vector<SignedPerm> base_dim2() {
    return {make_perm({1, 0}, {1, -1})};
}

// Read off the columns of Euler's four-square identity.
std::vector<SignedPerm> base_dim4() {
    return {
        make_perm({1, 0, 3, 2}, {-1, 1, 1, -1}),
        make_perm({2, 3, 0, 1}, {-1, -1, 1, 1}),
        make_perm({3, 2, 1, 0}, {-1, 1, -1, 1}),
    };
}

// Octonion left multiplications by the seven imaginary units.
std::vector<SignedPerm> base_dim8() {
    std::vector<SignedPerm> gens;
    for (std::size_t u = 1; u < 8; ++u) gens.push_back(cd_left_multiplication(3, u));
    return gens;
}

// Eight anticommuting complex structures on dimension 16: the seven
// octonion structures tensored with a swap, plus a rotation tensored with
// the identity.
std::vector<SignedPerm> sixteen_generators() {
    const SignedPerm swap2 = make_perm({1, 0}, {1, 1});
    const SignedPerm rot2 = make_perm({1, 0}, {1, -1});
    std::vector<SignedPerm> gens;
    for (const SignedPerm& f : base_dim8()) gens.push_back(kronecker(swap2, f));
    gens.push_back(kronecker(rot2, SignedPerm::identity(8)));
    return gens;
}

// Generators on dimension 2^e, count rho(2^e) − 1. The ×16 step realizes
// rho(16·M) = rho(M) + 8: the volume element w = E_1···E_8 of the
// dimension-16 set satisfies w² = I, wᵀ = w and anticommutes with each E_j,
// so {I_M ⊗ E_j} ∪ {F_i ⊗ w} anticommute pairwise.
std::vector<SignedPerm> generators_pow2(unsigned e) {
    switch (e) {
        case 0: return {};
        case 1: return base_dim2();
        case 2: return base_dim4();
        case 3: return base_dim8();
        default: {
            const std::vector<SignedPerm> inherited = generators_pow2(e - 4);
            const std::vector<SignedPerm> sixteen = sixteen_generators();
            SignedPerm w = sixteen[0];
            for (std::size_t j = 1; j < sixteen.size(); ++j) w = product(w, sixteen[j]);
            const SignedPerm id_m = SignedPerm::identity(std::size_t(1) << (e - 4));
            std::vector<SignedPerm> gens;
            for (const SignedPerm& ej : sixteen) gens.push_back(kronecker(id_m, ej));
            for (const SignedPerm& fi : inherited) gens.push_back(kronecker(fi, w));
            return gens;
        }
    }
}

}  // namespace

HRFamily build_hr_family(const Integer& N) {
    if (N < 1) throw domain_error("build_hr_family requires N >= 1");
    if (N > (Integer(1) << 31)) throw domain_error("family of this size cannot be materialized");
    const auto [exp, odd] = hrcore::dyadic_decompose(N);
    const unsigned e = static_cast<unsigned>(exp);
    const std::size_t odd_count = static_cast<std::size_t>(odd);
    const SignedPerm id_odd = SignedPerm::identity(odd_count);

    HRFamily fam;
    fam.N = static_cast<std::size_t>(N);
    fam.matrices.push_back(SignedPerm::identity(fam.N));
    for (const SignedPerm& g : generators_pow2(e))
        fam.matrices.push_back(kronecker(id_odd, g));
    return fam;
}

HRFamily truncate_family(const HRFamily& fam, const Integer& r_target) {
    if (r_target < 1 || r_target > Integer(fam.r()))
        throw domain_error("truncation size out of range");
    HRFamily out;
    out.N = fam.N;
    out.matrices.assign(fam.matrices.begin(),
                        fam.matrices.begin() + static_cast<std::size_t>(r_target));
    return out;
}

std::vector<IntMatrix> dense_matrices(const HRFamily& fam) {
    std::vector<IntMatrix> out;
    out.reserve(fam.r());
    for (const SignedPerm& m : fam.matrices) out.push_back(m.to_dense());
    return out;
}

namespace {

VerifyReport fail(std::string violation) { return {false, std::move(violation)}; }

std::string pair_name(const char* relation, std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << relation << "(" << i << "," << j << ")";
    return os.str();
}

std::string index_name(const char* relation, std::size_t i) {
    std::ostringstream os;
    os << relation << "(" << i << ")";
    return os.str();
}

VerifyReport verify_perms(std::size_t N, const std::vector<SignedPerm>& perms) {
    if (!perms[0].is_identity()) return fail("identity_first");
    if (Integer(perms.size()) > hrcore::rho(Integer(N))) return fail("family_size_exceeds_rho");
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (!product(perms[i].transposed(), perms[i]).is_identity())
            return fail(index_name("orthogonality", i));
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = i + 1; j < perms.size(); ++j) {
            // AᵢᵀAⱼ + AⱼᵀAᵢ = 0 iff the two signed permutations share
            // support with opposite signs.
            const SignedPerm p = product(perms[i].transposed(), perms[j]);
            const SignedPerm q = product(perms[j].transposed(), perms[i]);
            if (!(p == q.negated())) return fail(pair_name("anticommutation", i, j));
        }
    return {true, ""};
}

}  // namespace

VerifyReport verify_hr_family(const std::vector<IntMatrix>& matrices) {
    if (matrices.empty()) return fail("empty_family");
    const std::size_t N = matrices[0].rows();
    std::vector<SignedPerm> perms;
    perms.reserve(matrices.size());
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        if (matrices[i].rows() != N || matrices[i].cols() != N)
            return fail(index_name("dimension_mismatch", i));
        auto p = as_signed_perm(matrices[i]);
        if (!p) return fail(index_name("signed_permutation", i));
        perms.push_back(std::move(*p));
    }
    return verify_perms(N, perms);
}

VerifyReport verify_hr_family(const HRFamily& fam) {
    if (fam.matrices.empty()) return fail("empty_family");
    for (std::size_t i = 0; i < fam.matrices.size(); ++i)
        if (fam.matrices[i].size() != fam.N) return fail(index_name("dimension_mismatch", i));
    return verify_perms(fam.N, fam.matrices);
}

namespace {

std::vector<Rational> perm_apply(const SignedPerm& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size(), Rational(0));
    for (std::size_t c = 0; c < m.size(); ++c)
        out[m.row_of_col[c]] = Rational(m.sign_of_col[c]) * v[c];
    return out;
}

Rational norm_sq(const std::vector<Rational>& v) {
    Rational s(0);
    for (const Rational& x : v) s += x * x;
    return s;
}

}  // namespace

std::vector<Rational> bilinear_forms(const HRFamily& fam, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    if (a.size() != fam.r() || b.size() != fam.N)
        throw structural_error("square identity argument dimension mismatch");
    std::vector<Rational> c(fam.N, Rational(0));
    for (std::size_t j = 0; j < fam.r(); ++j) {
        if (a[j] == 0) continue;
        const std::vector<Rational> ab = perm_apply(fam.matrices[j], b);
        for (std::size_t i = 0; i < fam.N; ++i) c[i] += a[j] * ab[i];
    }
    return c;
}

bool verify_square_identity(const HRFamily& fam, const std::vector<Rational>& a,
                            const std::vector<Rational>& b) {
    const std::vector<Rational> c = bilinear_forms(fam, a, b);
    return norm_sq(a) * norm_sq(b) == norm_sq(c);
}

DualFamily dualize(const HRFamily& fam) {
    DualFamily dual;
    dual.N = fam.N;
    dual.r = fam.r();
    dual.b_matrices.assign(fam.N, IntMatrix(fam.N, fam.r()));
    // B_k[i][j] = A_j[i][k]: column k of A_j lands in column j of B_k.
    for (std::size_t j = 0; j < fam.r(); ++j) {
        const SignedPerm& a = fam.matrices[j];
        for (std::size_t k = 0; k < fam.N; ++k)
            dual.b_matrices[k].at(a.row_of_col[k], j) = a.sign_of_col[k];
    }
    return dual;
}

DualFamily normalize(const DualFamily& dual) {
    const std::size_t N = dual.N, r = dual.r;
    // The map b ↦ last column of B(b) has matrix L with L[:,i] = last
    // column of B_i.
    IntMatrix ell(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t row = 0; row < N; ++row) ell.at(row, i) = dual.b_matrices[i].at(row, r - 1);

    DualFamily out;
    out.N = N;
    out.r = r;
    out.normalized = true;
    out.b_matrices.assign(N, IntMatrix(N, r));

    if (const auto perm = as_signed_perm(ell)) {
        // L is a signed permutation, so the inverse change of coordinates
        // is a signed relabeling of the B list.
        const SignedPerm inv = perm->transposed();
        for (std::size_t k = 0; k < N; ++k) {
            const IntMatrix& src = dual.b_matrices[inv.row_of_col[k]];
            out.b_matrices[k] =
                inv.sign_of_col[k] == 1 ? src : src.scaled(Integer(-1));
        }
    } else {
        Matrix<Rational> ell_q(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) ell_q.at(i, j) = Rational(ell.at(i, j));
        const auto inv = inverse(ell_q);
        if (!inv) throw internal_error("normalization map b -> last column of B(b) is singular");
        for (std::size_t k = 0; k < N; ++k) {
            Matrix<Rational> acc(N, r);
            for (std::size_t i = 0; i < N; ++i) {
                const Rational& coef = inv->at(i, k);
                if (coef == 0) continue;
                const IntMatrix& bi = dual.b_matrices[i];
                for (std::size_t row = 0; row < N; ++row)
                    for (std::size_t col = 0; col < r; ++col)
                        if (bi.at(row, col) != 0) acc.at(row, col) += coef * Rational(bi.at(row, col));
            }
            for (std::size_t row = 0; row < N; ++row)
                for (std::size_t col = 0; col < r; ++col) {
                    if (!is_integral(acc.at(row, col)))
                        throw internal_error("normalization produced non-integer entries");
                    out.b_matrices[k].at(row, col) = numerator(acc.at(row, col));
                }
        }
    }

    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t row = 0; row < N; ++row)
            if (out.b_matrices[k].at(row, r - 1) != Integer(row == k ? 1 : 0))
                throw internal_error("normalization failed the last-column check");
    return out;
}

Matrix<Rational> dual_span_matrix(const DualFamily& dual, const std::vector<Rational>& b) {
    if (b.size() != dual.N) throw structural_error("dual span argument dimension mismatch");
    Matrix<Rational> span(dual.N, dual.r);
    for (std::size_t k = 0; k < dual.N; ++k) {
        if (b[k] == 0) continue;
        const IntMatrix& bk = dual.b_matrices[k];
        for (std::size_t i = 0; i < dual.N; ++i)
            for (std::size_t j = 0; j < dual.r; ++j)
                if (bk.at(i, j) != 0) span.at(i, j) += b[k] * Rational(bk.at(i, j));
    }
    return span;
}

std::vector<Rational> dual_bilinear_forms(const DualFamily& dual, const std::vector<Rational>& b,
                                          const std::vector<Rational>& a) {
    if (a.size() != dual.r) throw structural_error("dual bilinear form dimension mismatch");
    return dual_span_matrix(dual, b).apply(a);
}

std::uint64_t family_fingerprint(const HRFamily& fam) {
    std::ostringstream os;
    os << "N=" << fam.N << ";r=" << fam.r() << ";";
    for (const SignedPerm& m : fam.matrices) os << m.canonical_string() << "|";
    return fnv1a64(os.str());
}

}  // namespace skewfib::hrmat
