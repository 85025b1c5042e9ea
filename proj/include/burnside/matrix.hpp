#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("RatMatrix: entry count does not match dimensions");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Rational& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix: index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

inline RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

/// Exact determinant by Gaussian elimination. Pivot choice: first row with a
/// nonzero entry in the pivot column. A zero pivot column yields determinant 0.
inline Rational mat_det(const RatMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_det: matrix is not square");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            Rational factor = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(r, j) -= factor * m(col, j);
        }
    }
    return det;
}

namespace detail {

/// Gauss-Jordan on [a | rhs]; reduces a to the identity in place.
/// Throws when a is singular.
inline void jordan_eliminate(RatMatrix& m, std::size_t n, std::size_t width) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) m.swap_rows(pivot, col);
        Rational inv = Rational(1) / m(col, col);
        for (std::size_t j = col; j < width; ++j)
            m(col, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t j = col; j < width; ++j)
                m(r, j) -= factor * m(col, j);
        }
    }
}

}  // namespace detail

/// Exact inverse. Throws std::domain_error on singular input.
inline RatMatrix mat_inverse(const RatMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_inverse: matrix is not square");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rational(1);
    }
    detail::jordan_eliminate(aug, n, 2 * n);
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

/// Exact solution of a*x = v. Throws std::domain_error on singular input.
inline std::vector<Rational> mat_solve(const RatMatrix& a, const std::vector<Rational>& v) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_solve: matrix is not square");
    if (v.size() != a.rows())
        throw std::invalid_argument("mat_solve: vector length does not match");
    const std::size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = v[i];
    }
    detail::jordan_eliminate(aug, n, n + 1);
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

/// Basis of the exact null space {x : a*x = 0}, one vector per free column of
/// the reduced row echelon form, in column order.
inline std::vector<std::vector<Rational>> nullspace_basis(const RatMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    RatMatrix m = a;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) m.swap_rows(pivot, row);
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t j = col; j < cols; ++j)
                m(r, j) -= factor * m(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols);
        x[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            x[pivot_col_of_row[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Matrix-vector product.
inline std::vector<Rational> mat_apply(const RatMatrix& a, const std::vector<Rational>& x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("mat_apply: vector length does not match");
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace burnside
