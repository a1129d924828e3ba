#pragma once

#include <vector>

#include "drum/exact/matrix.hpp"
#include "drum/exact/polynomial.hpp"

namespace drum::exact {

namespace detail {

/// One Faddeev-LeVerrier step A*M for symmetric A and M = p(A): the product
/// is symmetric again, so only the upper triangle is accumulated.
inline IntegerMatrix symmetric_product(const IntegerMatrix& a, const IntegerMatrix& m) {
    const int n = a.rows();
    IntegerMatrix r(n, n);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < n; ++t) {
            const Int& v = a(i, t);
            if (v == 0) continue;
            if (v == 1)
                for (int j = i; j < n; ++j) r(i, j) += m(t, j);
            else
                for (int j = i; j < n; ++j) r(i, j) += v * m(t, j);
        }
        for (int j = i + 1; j < n; ++j) r(j, i) = r(i, j);
    }
    return r;
}

}  // namespace detail

/**
 * Exact characteristic polynomial det(xI - M), ascending coefficients,
 * leading coefficient 1, by Faddeev-LeVerrier: starting from M_0 = I,
 * N_k = M M_{k-1}, c_{n-k} = -tr(N_k)/k, M_k = N_k + c_{n-k} I. Every
 * division is exact and everything stays integral.
 */
inline Poly charpoly_exact(const IntegerMatrix& m) {
    if (!m.is_square()) throw error(errc::shape, "charpoly of a non-square matrix");
    const int n = m.rows();
    Poly c(n + 1);
    c[n] = 1;
    if (n == 0) return c;
    const bool symmetric = m.is_symmetric();
    IntegerMatrix acc = IntegerMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntegerMatrix prod =
            symmetric ? detail::symmetric_product(m, acc) : m * acc;
        Int tr = prod.trace();
        if (tr % k != 0)
            throw error(errc::shape, "charpoly trace division was not exact");
        c[n - k] = -tr / k;
        if (k < n) {
            acc = std::move(prod);
            for (int i = 0; i < n; ++i) acc(i, i) += c[n - k];
        }
    }
    return c;
}

}  // namespace drum::exact
