#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "drum/error.hpp"

namespace drum::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den as an exact rational. The two-argument cpp_rational constructor
/// insists on a positive denominator, so go through rational division.
inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw error(errc::singular, "zero denominator");
    return Rat(num) / Rat(den);
}

/**
 * Dense row-major matrix over an exact scalar type. IntegerMatrix entries
 * are arbitrary-precision integers, RationalMatrix entries are rationals
 * kept in lowest terms by the scalar type itself.
 */
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw error(errc::shape, "negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        if (!is_square()) throw error(errc::shape, "trace of a non-square matrix");
        T t = 0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    T entry_sum() const {
        T t = 0;
        for (const auto& v : a_) t += v;
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error(errc::shape, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int t = 0; t < a.cols_; ++t) {
                const T& v = a(i, t);
                if (v == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& w = b(t, j);
                    if (w == 0) continue;
                    if (v == 1)
                        r(i, j) += w;
                    else
                        r(i, j) += v * w;
                }
            }
        }
        return r;
    }

    friend Matrix operator*(const T& c, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Leading principal block of the given order.
    Matrix block(int row0, int col0, int nrows, int ncols) const {
        Matrix r(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
        return r;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw error(errc::shape, "matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using IntegerMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rat>;

inline RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

/// Exact conversion back to integers; Shape error if any entry is fractional.
inline IntegerMatrix to_integer(const RationalMatrix& m) {
    IntegerMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1)
                throw error(errc::shape, "matrix entry is not an integer");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

}  // namespace drum::exact
