#pragma once

#include <vector>

#include "drum/exact/matrix.hpp"

namespace drum::exact {

/**
 * Exact determinant by Bareiss fraction-free elimination: every division is
 * exact, intermediate values are minors of the input.
 */
inline Int det_bareiss(const IntegerMatrix& m) {
    if (!m.is_square()) throw error(errc::shape, "determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/**
 * Exact rank over the rationals, by fraction-free forward elimination with
 * column skipping.
 */
inline int rank_exact(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

/// Rank of a rational matrix: clear denominators per row, which preserves
/// rank, then run the integer elimination.
inline int rank_exact(const RationalMatrix& m) {
    IntegerMatrix a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            l = lcm(l, Int(denominator(m(i, j))));
        for (int j = 0; j < m.cols(); ++j)
            a(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return rank_exact(a);
}

/**
 * Exact inverse. Runs Bareiss-style Gauss-Jordan on [M | I]; the left block
 * ends as d*I with d = +-det(M) up to the row-swap sign, so the inverse is
 * the right block divided by d. Unimodular inputs produce integer entries.
 */
inline RationalMatrix inverse_exact(const IntegerMatrix& m) {
    if (!m.is_square()) throw error(errc::shape, "inverse of a non-square matrix");
    const int n = m.rows();
    IntegerMatrix a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw error(errc::singular, "matrix is singular");
        if (piv != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(piv, j));
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = num / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    // all diagonal entries now equal the final pivot
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = make_rational(a(i, n + j), a(i, i));
    return inv;
}

inline RationalMatrix inverse_exact(const RationalMatrix& m) {
    if (!m.is_square()) throw error(errc::shape, "inverse of a non-square matrix");
    const int n = m.rows();
    // common-denominator scaling: (c*M)^-1 * c = M^-1
    Int c = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c = lcm(c, Int(denominator(m(i, j))));
    IntegerMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = numerator(m(i, j)) * (c / denominator(m(i, j)));
    RationalMatrix inv = inverse_exact(a);
    return Rat(c) * inv;
}

/**
 * Primitive integer basis of the kernel of a rational matrix, one column per
 * basis vector: reduced row echelon form, free columns spun into vectors,
 * each scaled to coprime integers with the free coordinate positive.
 */
inline IntegerMatrix kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        Rat pv = a(r, col);
        for (int j = col; j < cols; ++j) a(r, j) /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    IntegerMatrix basis(cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        std::vector<Rat> v(cols, Rat(0));
        v[free_cols[k]] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a(static_cast<int>(i), free_cols[k]);
        Int l = 1;
        for (const auto& x : v) l = lcm(l, Int(denominator(x)));
        Int g = 0;
        std::vector<Int> w(cols);
        for (int i = 0; i < cols; ++i) {
            w[i] = numerator(v[i]) * (l / denominator(v[i]));
            g = gcd(g, w[i]);
        }
        for (int i = 0; i < cols; ++i) basis(i, static_cast<int>(k)) = w[i] / g;
    }
    return basis;
}

}  // namespace drum::exact
