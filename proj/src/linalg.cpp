#include "skewfib/linalg.hpp"

#include "skewfib/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace skewfib {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

// One-step Bareiss forward elimination, in place. Returns the pivot column
// used for each elimination row, in order. After the call, entries below
// the staircase are zero and every intermediate value was an exact minor.
std::vector<std::size_t> bareiss_forward(Matrix<Integer>& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivot_cols;
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && a.at(pr, c) == 0) ++pr;
        if (pr == m) continue;
        if (pr != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(pr, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank(const Matrix<Integer>& m) {
    Matrix<Integer> a = m;
    return bareiss_forward(a).size();
}

Matrix<Integer> cleared_rows(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale(1);
        for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            out.at(r, c) = numerator(q) * (scale / denominator(q));
        }
    }
    return out;
}

std::size_t rank(const Matrix<Rational>& m) { return rank(cleared_rows(m)); }

std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& m,
                                                  const std::vector<Rational>& y) {
    const std::size_t n = m.rows();
    if (m.cols() != n || y.size() != n) throw structural_error("solve_linear dimension mismatch");
    Matrix<Rational> aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = y[r];
    }
    Matrix<Integer> a = cleared_rows(aug);
    const auto pivots = bareiss_forward(a);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;  // singular
    std::vector<Rational> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        Rational acc(a.at(ri, n));
        for (std::size_t j = ri + 1; j < n; ++j) acc -= Rational(a.at(ri, j)) * x[j];
        x[ri] = acc / Rational(a.at(ri, ri));
    }
    return x;
}

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw structural_error("inverse requires a square matrix");
    Matrix<Rational> a = m;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a.at(pr, c) == 0) ++pr;
        if (pr == n) return std::nullopt;
        if (pr != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(pr, j));
                std::swap(inv.at(c, j), inv.at(pr, j));
            }
        const Rational piv = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace skewfib
