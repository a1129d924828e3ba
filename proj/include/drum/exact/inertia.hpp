#pragma once

#include "drum/exact/charpoly.hpp"
#include "drum/exact/elimination.hpp"

namespace drum::exact {

/// Exact eigenvalue sign counts of a symmetric matrix.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/**
 * Inertia of a symmetric integer matrix. The zero count is the exact
 * nullity; the positive count is the Descartes sign-variation count of the
 * characteristic polynomial, which is exact because symmetric matrices are
 * real-rooted.
 */
inline Inertia inertia_exact(const IntegerMatrix& m) {
    if (!m.is_symmetric())
        throw error(errc::not_symmetric, "inertia needs a symmetric matrix");
    Inertia r;
    r.zero = m.rows() - rank_exact(m);
    r.positive = descartes_positive_roots(charpoly_exact(m));
    r.negative = m.rows() - r.zero - r.positive;
    return r;
}

/// Exact eigenvalue multiplicity at a rational point: order - rank(M - lambda I).
inline int multiplicity_at(const IntegerMatrix& m, const Rat& lambda) {
    if (!m.is_symmetric())
        throw error(errc::not_symmetric, "multiplicity_at needs a symmetric matrix");
    const int n = m.rows();
    const Int num = numerator(lambda), den = denominator(lambda);
    // rank(M - lambda I) = rank(den*M - num*I), staying integral
    IntegerMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = den * m(i, j);
    for (int i = 0; i < n; ++i) a(i, i) -= num;
    return n - rank_exact(a);
}

}  // namespace drum::exact
