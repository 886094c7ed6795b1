#pragma once

#include "decatic/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace decatic {

/// Small dense row-major matrix over an exact scalar or polynomial ring.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T &fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Exact basis of the nullspace of M over a field scalar (Rational or
/// ExtendedScalar): Gauss-Jordan elimination with exact division. An empty
/// result means the nullspace is trivial.
template <class T>
std::vector<std::vector<T>> exact_nullspace(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("exact_nullspace: empty matrix");

    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && is_zero(m.at(pivot, col)))
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        const T inv = m.at(rank, col);
        for (std::size_t j = col; j < cols; ++j)
            m.at(rank, j) = m.at(rank, j) / inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || is_zero(m.at(i, col)))
                continue;
            const T factor = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(rank, j);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0)
            continue;
        std::vector<T> v(cols, T{});
        v[free_col] = ScalarOps<T>::from_int(1);
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -m.at(static_cast<std::size_t>(pivot_of_col[col]), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact determinant of a square matrix over a field scalar.
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    T det = ScalarOps<T>::from_int(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m.at(pivot, col)))
            ++pivot;
        if (pivot == n)
            return T{};
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        const T inv = m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m.at(i, col)))
                continue;
            const T factor = m.at(i, col) / inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return det;
}

/// Fraction-free Bareiss determinant over an integral domain (used for
/// matrices of polynomials, where plain elimination would need rational
/// functions). Every interior division is exact.
template <class T>
T determinant_bareiss(Matrix<T> m, const T &one) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant_bareiss: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return one;
    T denom = one;
    int sign_flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m.at(pivot, k)))
            ++pivot;
        if (pivot == n)
            return T{};
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(k, j));
            ++sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_quotient(num, denom);
            }
            m.at(i, k) = T{};
        }
        denom = m.at(k, k);
    }
    T det = m.at(n - 1, n - 1);
    return (sign_flips % 2) ? -det : det;
}

/// Exact polynomial quotient; throws if the division leaves a remainder.
template <class T>
UniPoly<T> exact_quotient(const UniPoly<T> &num, const UniPoly<T> &den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw std::domain_error("exact_quotient: division is not exact");
    return q;
}

inline Rational exact_quotient(const Rational &num, const Rational &den) { return num / den; }
inline ExtendedScalar exact_quotient(const ExtendedScalar &num, const ExtendedScalar &den) {
    return num / den;
}

} // namespace decatic
