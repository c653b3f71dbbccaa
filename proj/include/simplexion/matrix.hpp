#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "simplexion/errors.hpp"
#include "simplexion/number.hpp"

namespace simplexion {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    T* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const T* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool symmetric() const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw InvalidInput("matrix-vector: shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T(0)) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

template <class T>
T trace(const Matrix<T>& m) {
    T t(0);
    for (int i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
    return t;
}

}  // namespace simplexion
