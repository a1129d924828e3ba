#pragma once

#include <functional>
#include <vector>

#include "drum/complex.hpp"

namespace drum {

namespace detail {

/// Enumerate all cliques (vertex index sets, 0-based, increasing) of the
/// graph given by its adjacency matrix, growing larger cliques from smaller
/// ones. Singletons are included.
inline std::vector<std::vector<int>> cliques(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> frontier;
    for (int v = 0; v < n; ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier) {
            for (int v = c.back() + 1; v < n; ++v) {
                bool ok = true;
                for (int u : c)
                    if (!adj[u][v]) { ok = false; break; }
                if (ok) {
                    auto bigger = c;
                    bigger.push_back(v);
                    next.push_back(std::move(bigger));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace detail

/**
 * Barycentric refinement: vertex i+1 of the result stands for the i-th
 * simplex of K in canonical order, and the faces are the cliques of the
 * inclusion-comparability graph (the Whitney complex). The result carries
 * per-vertex origin dimensions as refinement metadata.
 */
inline Complex barycentric_refine(const Complex& K) {
    const auto& s = K.simplices();
    const int n = K.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s[i].comparable(s[j])) adj[i][j] = adj[j][i] = true;

    std::vector<Simplex> simplices;
    for (const auto& c : detail::cliques(adj)) {
        std::vector<int> verts;
        verts.reserve(c.size());
        for (int v : c) verts.push_back(v + 1);
        simplices.emplace_back(std::move(verts));
    }
    std::sort(simplices.begin(), simplices.end());

    std::vector<int> origin(n);
    for (int i = 0; i < n; ++i) origin[i] = s[i].dim();
    return Complex(std::move(simplices), std::move(origin));
}

/**
 * Euler characteristic of the unit sphere S(x): the Whitney complex of the
 * subgraph of the refinement graph induced on the simplices comparable to x.
 * Satisfies the star formula 1 - chi(S(x)) = chi(St(x)).
 */
inline long long sphere_euler_characteristic(const Complex& K, const Simplex& x) {
    if (!K.contains(x))
        throw error(errc::not_a_simplex, x.to_string() + " is not in the complex");
    std::vector<const Simplex*> nbrs;
    for (const auto& z : K.simplices())
        if (z.comparable(x)) nbrs.push_back(&z);
    const int n = static_cast<int>(nbrs.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (nbrs[i]->comparable(*nbrs[j])) adj[i][j] = adj[j][i] = true;
    long long chi = 0;
    for (const auto& c : detail::cliques(adj))
        chi += (c.size() % 2) ? 1 : -1;
    return chi;
}

}  // namespace drum
