#include "skewfib/fibration.hpp"

#include "skewfib/error.hpp"
#include "skewfib/hrcore.hpp"
#include "skewfib/linalg.hpp"
#include "skewfib/rng.hpp"

#include <sstream>

namespace skewfib::fibration {

AffineSubspace::AffineSubspace(std::vector<Rational> base, Matrix<Rational> directions)
    : base_(std::move(base)), directions_(std::move(directions)) {
    if (base_.empty()) throw structural_error("affine subspace needs a positive ambient dimension");
    if (directions_.rows() != base_.size())
        throw structural_error("direction matrix does not match the ambient dimension");
    if (rank(directions_) != directions_.cols())
        throw domain_error("direction matrix is rank deficient");
}

bool pairwise_skew(const AffineSubspace& a, const AffineSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw structural_error("skewness test requires a common ambient space");
    const std::size_t n = a.ambient_dim();
    const std::size_t pa = a.dim(), pb = b.dim();
    Matrix<Rational> stacked(n, pa + pb + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < pa; ++j) stacked.at(i, j) = a.directions().at(i, j);
        for (std::size_t j = 0; j < pb; ++j) stacked.at(i, pa + j) = b.directions().at(i, j);
        stacked.at(i, pa + pb) = b.base()[i] - a.base()[i];
    }
    return rank(stacked) == pa + pb + 1;
}

SkewFibration build_fibration(const Integer& p, const Integer& n) {
    if (!hrcore::exists_fibration({p, n})) {
        std::ostringstream os;
        os << "no fibration of R^" << n << " by pairwise skew " << p
           << "-dimensional affine subspaces: p <= rho(n-p)-1 fails (rho(" << (n - p)
           << ") = " << hrcore::rho(n - p) << ")";
        throw domain_error(os.str());
    }
    const Integer big_n = n - p;
    const Integer r = p + 1;
    const hrmat::HRFamily fam =
        hrmat::truncate_family(hrmat::build_hr_family(big_n), r);
    SkewFibration fib;
    fib.N = fam.N;
    fib.r = fam.r();
    fib.dual = hrmat::normalize(hrmat::dualize(fam));
    return fib;
}

AffineSubspace fiber_at(const SkewFibration& fib, const std::vector<Rational>& b) {
    if (b.size() != fib.N) throw structural_error("fiber parameter has the wrong dimension");
    const std::size_t p = fib.fiber_dim();
    const Matrix<Rational> span = hrmat::dual_span_matrix(fib.dual, b);
    std::vector<Rational> base(fib.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < fib.N; ++i) base[p + i] = b[i];
    Matrix<Rational> dirs(fib.ambient_dim(), p);
    for (std::size_t j = 0; j < p; ++j) {
        dirs.at(j, j) = 1;
        for (std::size_t i = 0; i < fib.N; ++i) dirs.at(p + i, j) = span.at(i, j);
    }
    return AffineSubspace(std::move(base), std::move(dirs));
}

std::vector<Rational> fiber_point(const SkewFibration& fib, const std::vector<Rational>& b,
                                  const std::vector<Rational>& x) {
    if (b.size() != fib.N || x.size() != fib.fiber_dim())
        throw structural_error("fiber point arguments have the wrong dimension");
    const Matrix<Rational> span = hrmat::dual_span_matrix(fib.dual, b);
    std::vector<Rational> point(fib.ambient_dim());
    for (std::size_t j = 0; j < x.size(); ++j) point[j] = x[j];
    for (std::size_t i = 0; i < fib.N; ++i) {
        Rational y = b[i];
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!(span.at(i, j) == 0)) y += span.at(i, j) * x[j];
        point[x.size() + i] = y;
    }
    return point;
}

std::vector<Rational> base_point(const SkewFibration& fib, const std::vector<Rational>& point) {
    if (point.size() != fib.ambient_dim())
        throw structural_error("projection argument has the wrong dimension");
    const std::size_t p = fib.fiber_dim();
    const std::vector<Rational> x(point.begin(), point.begin() + p);
    const std::vector<Rational> y(point.begin() + p, point.end());
    // M(x)[i][k] = δ_ik + (B'_k · x)_i, so that M(x)·b = y picks the unique
    // b with y = B'(b)·x + b.
    Matrix<Rational> m(fib.N, fib.N);
    for (std::size_t k = 0; k < fib.N; ++k) {
        const hrmat::IntMatrix& bk = fib.dual.b_matrices[k];
        for (std::size_t i = 0; i < fib.N; ++i) {
            Rational acc(i == k ? 1 : 0);
            for (std::size_t j = 0; j < p; ++j)
                if (bk.at(i, j) != 0) acc += Rational(bk.at(i, j)) * x[j];
            m.at(i, k) = acc;
        }
    }
    auto b = solve_linear(m, y);
    if (!b)
        throw internal_error(
            "fiber-parameter system is singular; the fibration data is corrupted");
    return *b;
}

std::string SkewnessReport::describe() const {
    std::ostringstream os;
    if (pass) {
        os << "pass: " << pairs_checked << "/" << pairs_checked
           << " sampled fiber pairs are pairwise skew";
        return os.str();
    }
    auto print_vec = [&os](const std::vector<Rational>& v) {
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rational_string(v[i]);
        os << ")";
    };
    os << "fail: fibers at b1=";
    print_vec(witness_b1);
    os << " and b2=";
    print_vec(witness_b2);
    os << " are not skew (sample " << sample_index << ")";
    return os.str();
}

SkewnessReport verify_fibration(const SkewFibration& fib, std::size_t sample_count,
                                std::uint64_t seed) {
    if (sample_count < 1) throw domain_error("verification needs at least one sample");
    Rng rng(seed);
    SkewnessReport report;
    for (std::size_t s = 0; s < sample_count; ++s) {
        std::vector<Rational> b1 = rng.rational_vector(fib.N, -9, 9);
        std::vector<Rational> b2 = rng.rational_vector(fib.N, -9, 9);
        while (b2 == b1) b2 = rng.rational_vector(fib.N, -9, 9);  // skewness is a
                                                                  // relation on distinct fibers
        if (!pairwise_skew(fiber_at(fib, b1), fiber_at(fib, b2))) {
            report.pass = false;
            report.pairs_checked = s;
            report.sample_index = s;
            report.witness_b1 = std::move(b1);
            report.witness_b2 = std::move(b2);
            return report;
        }
    }
    report.pass = true;
    report.pairs_checked = sample_count;
    return report;
}

}  // namespace skewfib::fibration
