#pragma once

#include <vector>

#include "drum/exact/matrix.hpp"

namespace drum::exact {

/// Polynomials are coefficient vectors in ascending degree: p[k] is the
/// coefficient of x^k. The zero polynomial is the empty vector.
using Poly = std::vector<Int>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Int poly_eval(const Poly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline double poly_eval(const Poly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// p(x) * x^k.
inline Poly poly_shift(const Poly& p, int k) {
    if (p.empty()) return {};
    Poly r(p.size() + k, Int(0));
    for (size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    Poly r;
    for (size_t k = 1; k < p.size(); ++k) r.push_back(Int(k) * p[k]);
    return poly_trim(r);
}

inline Int poly_content(const Poly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

inline Poly poly_primitive(Poly p) {
    p = poly_trim(std::move(p));
    Int g = poly_content(p);
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

namespace detail {

/// Pseudo-remainder of a by b (leading coefficient of b raised to the needed
/// power and multiplied through so the division stays integral).
inline Poly poly_pseudo_rem(Poly a, const Poly& b) {
    const Int& lb = b.back();
    while (poly_degree(a) >= poly_degree(b) && !a.empty()) {
        int shift = poly_degree(a) - poly_degree(b);
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= la * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

}  // namespace detail

/// Primitive gcd of integer polynomials via the primitive PRS.
inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_primitive(std::move(a));
    b = poly_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        Poly r = poly_primitive(detail::poly_pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Number of distinct complex roots: the degree of the square-free part
/// p / gcd(p, p').
inline int distinct_root_count(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.size() <= 1) return 0;
    Poly g = poly_gcd(q, poly_derivative(q));
    return poly_degree(q) - poly_degree(g);
}

/// Sign variations in the nonzero coefficient sequence. For a real-rooted
/// polynomial this counts the positive roots exactly (Descartes).
inline int descartes_positive_roots(const Poly& p) {
    int count = 0;
    int last = 0;
    for (const auto& c : p) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace drum::exact
