#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "drum/complex.hpp"

namespace drum {

/**
 * The library's only randomness source, pinned so that fixtures survive
 * reimplementation in any language:
 *
 *   state <- state + 0x9E3779B97F4A7C15                 (mod 2^64)
 *   z <- state
 *   z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9         (mod 2^64)
 *   z <- (z xor (z >> 27)) * 0x94D049BB133111EB         (mod 2^64)
 *   output: z xor (z >> 31)
 *
 * and uniform_in(k) = 1 + (output mod k).
 */
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {1, ..., k}.
    int uniform_in(int k) { return 1 + static_cast<int>(next() % static_cast<uint64_t>(k)); }

private:
    uint64_t state_;
};

/**
 * Random complex on the vertex set {1..n}: m draws of a subset obtained by
 * picking a size k uniform in 1..n and then k vertices uniformly with
 * replacement, then the downward closure of the drawn family. Deterministic
 * for a fixed seed.
 */
inline Complex random_complex(int n, int m, uint64_t seed) {
    if (n < 1 || m < 1)
        throw error(errc::bad_parameter, "random_complex needs n >= 1 and m >= 1");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> family;
    family.reserve(m);
    for (int t = 0; t < m; ++t) {
        int k = rng.uniform_in(n);
        std::set<int> s;
        for (int i = 0; i < k; ++i) s.insert(rng.uniform_in(n));
        family.emplace_back(s.begin(), s.end());
    }
    return Complex::generate(family);
}

/**
 * Random graph with v vertices and e distinct edges, as the 1-dimensional
 * complex of all v singletons plus the chosen edges (isolated vertices are
 * kept). Edges are a partial Fisher-Yates sample of all vertex pairs.
 */
inline Complex random_graph_complex(int v, int e, uint64_t seed) {
    if (v < 1 || e < 0)
        throw error(errc::bad_parameter, "random_graph_complex needs v >= 1 and e >= 0");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b) pairs.emplace_back(a, b);
    if (e > static_cast<int>(pairs.size()))
        throw error(errc::bad_parameter, "more edges requested than vertex pairs");
    SplitMix64 rng(seed);
    for (int i = 0; i < e; ++i) {
        int j = i + rng.uniform_in(static_cast<int>(pairs.size()) - i) - 1;
        std::swap(pairs[i], pairs[j]);
    }
    std::vector<std::vector<int>> family;
    for (int a = 1; a <= v; ++a) family.push_back({a});
    for (int i = 0; i < e; ++i) family.push_back({pairs[i].first, pairs[i].second});
    return Complex::generate(family);
}

/// Random tree on v vertices by uniform attachment: vertex i joins a uniform
/// earlier vertex. Always connected, b1 = 0.
inline Complex random_tree_complex(int v, uint64_t seed) {
    if (v < 1)
        throw error(errc::bad_parameter, "random_tree_complex needs v >= 1");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> family;
    family.push_back({1});
    for (int i = 2; i <= v; ++i) family.push_back({rng.uniform_in(i - 1), i});
    return Complex::generate(family);
}

}  // namespace drum
