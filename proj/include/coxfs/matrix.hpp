#pragma once

#include "coxfs/poly.hpp"
#include "coxfs/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace coxfs {

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (scalar_is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (!scalar_is_zero(b(k, j))) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    bool is_identity() const { return r_ == c_ && *this == identity(r_); }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))>
    {
        Matrix<decltype(f(std::declval<T>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

/// Row echelon form in place; returns the rank.
template <class T>
std::size_t row_reduce(Matrix<T>& m)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && scalar_is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        T inv = T(1) / m(rank, col);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (scalar_is_zero(m(r, col))) continue;
            T f = m(r, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return row_reduce(m);
}

template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && scalar_is_zero(m(piv, col))) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        T inv = T(1) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (scalar_is_zero(m(r, col))) continue;
            T f = m(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

/// det(1 - x w) as the alternating sum of principal minors.
template <class T>
Poly<T> det_one_minus_x(const Matrix<T>& w)
{
    std::size_t n = w.rows();
    std::vector<T> coeff(n + 1, T(0));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Matrix<T> sub(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = w(idx[i], idx[j]);
        T d = idx.empty() ? T(1) : determinant(sub);
        if (idx.size() % 2) d = -d;
        coeff[idx.size()] += d;
    }
    return Poly<T>(std::move(coeff));
}

} // namespace coxfs
