#pragma once

#include "skewfib/error.hpp"

#include <cstddef>
#include <vector>

namespace skewfib {

// Dense row-major matrix over an exact scalar type (Integer or Rational).
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw structural_error("matrix-vector dimension mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            T acc(0);
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(at(r, c) == T(0))) acc += at(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw structural_error("matrix product dimension mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (!(bkj == T(0))) m.at(i, j) += aik * bkj;
                }
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw structural_error("matrix sum dimension mismatch");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
        return m;
    }

    Matrix scaled(const T& s) const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
        return m;
    }

    // Kronecker product; (a ⊗ b) acts blockwise with a's entries as block
    // coefficients.
    friend Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const T& aij = a.at(i, j);
                if (aij == T(0)) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        m.at(i * b.rows_ + k, j * b.cols_ + l) = aij * b.at(k, l);
            }
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace skewfib
