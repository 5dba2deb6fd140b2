#include "skewfib/signed_perm.hpp"

#include "skewfib/error.hpp"

#include <sstream>

namespace skewfib {

SignedPerm SignedPerm::identity(std::size_t n) {
    SignedPerm p;
    p.row_of_col.resize(n);
    p.sign_of_col.assign(n, 1);
    for (std::size_t c = 0; c < n; ++c) p.row_of_col[c] = c;
    return p;
}

SignedPerm SignedPerm::transposed() const {
    SignedPerm t;
    t.row_of_col.resize(size());
    t.sign_of_col.resize(size());
    for (std::size_t c = 0; c < size(); ++c) {
        t.row_of_col[row_of_col[c]] = c;
        t.sign_of_col[row_of_col[c]] = sign_of_col[c];
    }
    return t;
}

SignedPerm SignedPerm::negated() const {
    SignedPerm n = *this;
    for (auto& s : n.sign_of_col) s = -s;
    return n;
}

bool SignedPerm::is_identity() const {
    for (std::size_t c = 0; c < size(); ++c)
        if (row_of_col[c] != c || sign_of_col[c] != 1) return false;
    return true;
}

Matrix<Integer> SignedPerm::to_dense() const {
    Matrix<Integer> m(size(), size());
    for (std::size_t c = 0; c < size(); ++c) m.at(row_of_col[c], c) = sign_of_col[c];
    return m;
}

std::string SignedPerm::canonical_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < size(); ++c)
        os << (sign_of_col[c] < 0 ? "-" : "+") << row_of_col[c] << ";";
    return os.str();
}

SignedPerm product(const SignedPerm& a, const SignedPerm& b) {
    if (a.size() != b.size()) throw structural_error("signed permutation size mismatch");
    SignedPerm p;
    p.row_of_col.resize(a.size());
    p.sign_of_col.resize(a.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
        const std::size_t mid = b.row_of_col[c];
        p.row_of_col[c] = a.row_of_col[mid];
        p.sign_of_col[c] = a.sign_of_col[mid] * b.sign_of_col[c];
    }
    return p;
}

SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm k;
    const std::size_t nb = b.size();
    k.row_of_col.resize(a.size() * nb);
    k.sign_of_col.resize(a.size() * nb);
    for (std::size_t ca = 0; ca < a.size(); ++ca)
        for (std::size_t cb = 0; cb < nb; ++cb) {
            k.row_of_col[ca * nb + cb] = a.row_of_col[ca] * nb + b.row_of_col[cb];
            k.sign_of_col[ca * nb + cb] = a.sign_of_col[ca] * b.sign_of_col[cb];
        }
    return k;
}

std::optional<SignedPerm> as_signed_perm(const Matrix<Integer>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    SignedPerm p;
    p.row_of_col.assign(n, n);
    p.sign_of_col.assign(n, 0);
    std::vector<bool> row_used(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            const Integer& x = m.at(r, c);
            if (x == 0) continue;
            if (!(x == 1 || x == -1)) return std::nullopt;
            if (p.sign_of_col[c] != 0) return std::nullopt;  // second nonzero in column
            if (row_used[r]) return std::nullopt;            // second nonzero in row
            p.row_of_col[c] = r;
            p.sign_of_col[c] = (x == 1) ? 1 : -1;
            row_used[r] = true;
        }
        if (p.sign_of_col[c] == 0) return std::nullopt;  // empty column
    }
    return p;
}

}  // namespace skewfib
