#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "drum/error.hpp"

namespace drum {

/**
 * A simplex: a nonempty set of positive integer vertex ids, stored strictly
 * increasing. dim() is cardinality minus one and omega() = (-1)^dim is the
 * parity sign that drives every Euler-characteristic sum in the library.
 */
class Simplex {
public:
    explicit Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
        if (verts_.empty())
            throw error(errc::empty_input, "simplex needs at least one vertex");
        std::sort(verts_.begin(), verts_.end());
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
        if (verts_.front() <= 0)
            throw error(errc::bad_vertex, "vertex ids must be positive");
    }

    Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return verts_; }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    int omega() const { return dim() % 2 ? -1 : 1; }

    /// y is a (not necessarily proper) face of this simplex.
    bool contains(const Simplex& y) const {
        return std::includes(verts_.begin(), verts_.end(), y.verts_.begin(), y.verts_.end());
    }

    bool intersects(const Simplex& y) const {
        auto a = verts_.begin();
        auto b = y.verts_.begin();
        while (a != verts_.end() && b != y.verts_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    /// Strict inclusion one way or the other; the edge relation of the
    /// refinement graph.
    bool comparable(const Simplex& y) const {
        if (dim() == y.dim()) return false;
        return dim() < y.dim() ? y.contains(*this) : contains(y);
    }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.verts_ == b.verts_; }

    /// Canonical order: dimension ascending, then lexicographic on vertices.
    /// This is the matrix index order used everywhere.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (a.verts_.size() != b.verts_.size())
            return a.verts_.size() <=> b.verts_.size();
        return a.verts_ <=> b.verts_;
    }

private:
    std::vector<int> verts_;
};

/**
 * A finite set of simplices that is NOT required to be downward closed.
 * Stars and star intersections are of this kind; their Euler characteristic
 * is the raw omega sum, which is exactly what the Green star formula needs.
 */
class SimplexSet {
public:
    SimplexSet() = default;

    explicit SimplexSet(std::vector<Simplex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<Simplex>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const Simplex& x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

    SimplexSet intersect(const SimplexSet& other) const {
        std::vector<Simplex> out;
        std::set_intersection(members_.begin(), members_.end(),
                              other.members_.begin(), other.members_.end(),
                              std::back_inserter(out));
        SimplexSet r;
        r.members_ = std::move(out);  // both inputs sorted and unique
        return r;
    }

    long long euler_characteristic() const {
        long long t = 0;
        for (const auto& x : members_) t += x.omega();
        return t;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const SimplexSet& a, const SimplexSet& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Simplex> members_;
};

}  // namespace drum
