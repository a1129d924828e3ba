#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "drum/simplex.hpp"

namespace drum {

class Complex;
inline Complex barycentric_refine(const Complex& K);

/**
 * A finite abstract simplicial complex: a downward-closed family of
 * simplices held in canonical order (dimension ascending, lexicographic on
 * vertices within a dimension). The canonical position of a simplex is the
 * row/column index of every matrix built over the complex, so two complexes
 * with equal simplex sets always produce identical matrices.
 *
 * A complex produced by barycentric_refine() additionally carries the origin
 * dimension of each of its vertices (the dimension of the simplex of the
 * base complex the vertex was made from). The Hydrogen conjugation and the
 * connection-spectrum Betti readings require that metadata.
 */
class Complex {
public:
    /// Downward closure of an arbitrary family of nonempty vertex sets.
    /// Idempotent: generating from a complex's own simplices reproduces it.
    static Complex generate(const std::vector<std::vector<int>>& sets) {
        if (sets.empty())
            throw error(errc::empty_input, "generating family is empty");
        std::vector<Simplex> all;
        for (const auto& s : sets) {
            Simplex top(s);  // validates vertex ids
            const auto& v = top.vertices();
            const size_t n = v.size();
            if (n > 22)
                throw error(errc::bad_parameter,
                            "generating set with " + std::to_string(n) +
                                " vertices is too large for the dense closure");
            // all nonempty subsets
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> sub;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) sub.push_back(v[i]);
                all.emplace_back(std::move(sub));
            }
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return Complex(std::move(all), {});
    }

    const std::vector<Simplex>& simplices() const { return simplices_; }
    int size() const { return static_cast<int>(simplices_.size()); }
    const Simplex& simplex(int i) const { return simplices_[i]; }

    int dim() const { return simplices_.back().dim(); }

    /// f-vector (v_0, ..., v_r): simplex counts per dimension.
    const std::vector<int>& f_vector() const { return fvec_; }

    /// Canonical position of x, if x is a member.
    std::optional<int> index_of(const Simplex& x) const {
        auto it = std::lower_bound(simplices_.begin(), simplices_.end(), x);
        if (it != simplices_.end() && *it == x)
            return static_cast<int>(it - simplices_.begin());
        return std::nullopt;
    }

    bool contains(const Simplex& x) const { return index_of(x).has_value(); }

    /// First canonical index of dimension-k simplices and the count, as the
    /// contiguous block [offset, offset+count) of the canonical order.
    std::pair<int, int> dim_range(int k) const {
        int off = 0;
        for (int d = 0; d < k && d < static_cast<int>(fvec_.size()); ++d) off += fvec_[d];
        int cnt = k < static_cast<int>(fvec_.size()) ? fvec_[k] : 0;
        return {off, cnt};
    }

    /// True when this complex was built by barycentric_refine() and still
    /// knows which base simplex each of its vertices came from.
    bool is_refinement() const { return !origin_dims_.empty(); }

    /// origin_dims()[i] is the dimension of the base simplex that became
    /// vertex i+1. Only available on refinements.
    const std::vector<int>& origin_dims() const {
        if (origin_dims_.empty())
            throw error(errc::needs_refinement_context,
                        "complex carries no refinement metadata");
        return origin_dims_;
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.simplices_ == b.simplices_;
    }

private:
    Complex(std::vector<Simplex> simplices, std::vector<int> origin_dims)
        : simplices_(std::move(simplices)), origin_dims_(std::move(origin_dims)) {
        fvec_.assign(simplices_.empty() ? 0 : simplices_.back().dim() + 1, 0);
        for (const auto& x : simplices_) ++fvec_[x.dim()];
    }

    friend Complex barycentric_refine(const Complex& K);

    std::vector<Simplex> simplices_;  // canonical order
    std::vector<int> fvec_;
    std::vector<int> origin_dims_;    // empty unless a refinement
};

inline long long euler_characteristic(const Complex& K) {
    long long t = 0;
    for (const auto& x : K.simplices()) t += x.omega();
    return t;
}

inline long long euler_characteristic(const SimplexSet& A) {
    return A.euler_characteristic();
}

/// St(x) = { z in K : x subset z }, including x itself. Not a complex.
inline SimplexSet star(const Complex& K, const Simplex& x) {
    if (!K.contains(x))
        throw error(errc::not_a_simplex, x.to_string() + " is not in the complex");
    std::vector<Simplex> out;
    for (const auto& z : K.simplices())
        if (z.contains(x)) out.push_back(z);
    return SimplexSet(std::move(out));
}

/// W^-(x) = { z in K : z subset x }: the complete complex below x, chi = 1.
inline SimplexSet core(const Complex& K, const Simplex& x) {
    if (!K.contains(x))
        throw error(errc::not_a_simplex, x.to_string() + " is not in the complex");
    std::vector<Simplex> out;
    for (const auto& z : K.simplices())
        if (x.contains(z)) out.push_back(z);
    return SimplexSet(std::move(out));
}

/// Wu characteristic: sum of omega(x)*omega(y) over ordered pairs of
/// intersecting simplices, x = y included.
inline long long wu_characteristic(const Complex& K) {
    const auto& s = K.simplices();
    long long t = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        t += 1;  // self pair
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i].intersects(s[j]))
                t += 2LL * s[i].omega() * s[j].omega();
    }
    return t;
}

namespace detail {

/// Vertex ids and degree/adjacency of the underlying graph of a complex of
/// dimension <= 1.
struct GraphView {
    std::vector<int> vertices;                  // sorted vertex ids
    std::vector<std::pair<int, int>> edges;     // index pairs into vertices
    std::vector<int> degree;                    // per vertex index
};

inline GraphView graph_view(const Complex& K) {
    if (K.dim() > 1)
        throw error(errc::not_one_dimensional,
                    "operation needs a complex of dimension <= 1");
    GraphView g;
    for (const auto& x : K.simplices())
        if (x.dim() == 0) g.vertices.push_back(x.vertices()[0]);
    auto vid = [&](int v) {
        return static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), v) -
                                g.vertices.begin());
    };
    g.degree.assign(g.vertices.size(), 0);
    for (const auto& x : K.simplices()) {
        if (x.dim() != 1) continue;
        int a = vid(x.vertices()[0]), b = vid(x.vertices()[1]);
        g.edges.emplace_back(a, b);
        ++g.degree[a];
        ++g.degree[b];
    }
    return g;
}

}  // namespace detail

struct ComponentsCycles {
    long long b0 = 0;
    long long b1 = 0;
};

/// Combinatorial Betti numbers of a complex of dimension <= 1: components by
/// union-find, cycles by Euler-Poincare b1 = |E| - |V| + b0.
inline ComponentsCycles components_and_cycles(const Complex& K) {
    auto g = detail::graph_view(K);
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    long long components = static_cast<long long>(g.vertices.size());
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    ComponentsCycles r;
    r.b0 = components;
    r.b1 = static_cast<long long>(g.edges.size()) -
           static_cast<long long>(g.vertices.size()) + components;
    return r;
}

/// Zagreb index of the underlying graph: sum of squared vertex degrees.
inline long long zagreb_index(const Complex& K) {
    auto g = detail::graph_view(K);
    long long t = 0;
    for (int d : g.degree) t += static_cast<long long>(d) * d;
    return t;
}

}  // namespace drum
