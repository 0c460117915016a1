#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "gext/scalar.hpp"

namespace gext {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(int n) { return Vec<K>(n, K(0)); }

template <class K>
Vec<K> unit_vec(int n, int i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
Vec<K>& axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
    assert(y.size() == x.size());
    if (a.is_zero()) return y;
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

// Dense matrix, row-major. Semantics are dense even where storage could be sparse.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    friend Matrix operator*(const K& c, Matrix m) {
        for (auto& x : m.a_) x = c * x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Vec<K> apply(const Vec<K>& v) const {
        assert(int(v.size()) == cols_);
        Vec<K> r(rows_, K(0));
        for (int j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (int i = 0; i < rows_; ++i) {
                const K& x = (*this)(i, j);
                if (!x.is_zero()) r[i] += x * v[j];
            }
        }
        return r;
    }

    void set_col(int j, const Vec<K>& v) {
        assert(int(v.size()) == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }
    Vec<K> col(int j) const {
        Vec<K> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec<K> row(int i) const {
        Vec<K> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += (*this)(i, j).str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

// Builds the matrix of a linear map given its value on each standard basis vector.
template <class K, class F>
Matrix<K> matrix_from_columns(int rows, int cols, F&& column) {
    Matrix<K> m(rows, cols);
    for (int j = 0; j < cols; ++j) m.set_col(j, column(j));
    return m;
}

} // namespace gext
