#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "drum/exact/inertia.hpp"

namespace drum::exact {

/**
 * Numeric eigenvalue view of a symmetric matrix, backed by exact integer
 * facts: the inertia is computed exactly, and the multiplicities at the
 * probed rational points are exact rank computations, never numeric
 * clustering.
 */
struct SpectralSummary {
    std::vector<double> eigenvalues;        // sorted descending
    Inertia inertia;
    std::map<Rat, int> exact_multiplicities;
};

namespace detail {

/// Cyclic Jacobi sweeps on a dense symmetric matrix until every off-diagonal
/// entry is below tol. Returns the diagonal (unsorted eigenvalues).
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a,
                                              double tol) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return {};
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a[i][j]));
        if (off < tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < tol / (16.0 * n)) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

inline std::vector<std::vector<double>> to_double(const IntegerMatrix& m) {
    std::vector<std::vector<double>> a(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).convert_to<double>();
    return a;
}

}  // namespace detail

/// Numeric eigenvalues of a symmetric matrix, sorted descending.
inline std::vector<double> eigenvalues_numeric(const IntegerMatrix& m,
                                               double tol = 1e-12) {
    if (!m.is_symmetric())
        throw error(errc::not_symmetric, "eigensolver needs a symmetric matrix");
    auto eig = detail::jacobi_eigenvalues(detail::to_double(m), tol);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

inline SpectralSummary eig_symmetric(const IntegerMatrix& m, double tol = 1e-12,
                                     const std::vector<Rat>& probes = {Rat(-1), Rat(0),
                                                                       Rat(1)}) {
    if (tol <= 0) throw error(errc::bad_parameter, "tolerance must be positive");
    SpectralSummary s;
    s.eigenvalues = eigenvalues_numeric(m, tol);
    s.inertia = inertia_exact(m);
    for (const auto& p : probes) s.exact_multiplicities[p] = multiplicity_at(m, p);
    return s;
}

}  // namespace drum::exact
