#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx {

using VertexId = int;

/// A finite set of vertex ids kept sorted strictly increasing.
/// dim() == -1 is the empty simplex, which is a first-class citizen here:
/// materializing it makes d: C^{-1} -> C^0 and the coboundary space B^0
/// come out of the generic machinery instead of special cases.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexId> verts) : v_(std::move(verts)) {
        std::sort(v_.begin(), v_.end());
        if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
            throw BadArgs("simplex has repeated vertex: " + to_string_raw(v_));
    }

    Simplex(std::initializer_list<VertexId> verts) : Simplex(std::vector<VertexId>(verts)) {}

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t card() const { return v_.size(); }
    const std::vector<VertexId>& verts() const { return v_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }

    bool contains(VertexId u) const {
        return std::binary_search(v_.begin(), v_.end(), u);
    }

    /// Subset test (this <= other as sets).
    bool subset_of(const Simplex& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const Simplex& other) const {
        std::size_t i = 0, j = 0;
        while (i < v_.size() && j < other.v_.size()) {
            if (v_[i] == other.v_[j]) return false;
            (v_[i] < other.v_[j]) ? ++i : ++j;
        }
        return true;
    }

    Simplex union_with(const Simplex& other) const {
        std::vector<VertexId> out;
        out.reserve(v_.size() + other.v_.size());
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);  // already sorted unique
        return s;
    }

    Simplex minus(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    Simplex without(VertexId u) const {
        std::vector<VertexId> out;
        out.reserve(v_.size());
        for (VertexId x : v_)
            if (x != u) out.push_back(x);
        Simplex s;
        s.v_ = std::move(out);
        return s;
    }

    Simplex with(VertexId u) const {
        Simplex s = *this;
        auto it = std::lower_bound(s.v_.begin(), s.v_.end(), u);
        if (it != s.v_.end() && *it == u)
            throw BadArgs("vertex already present: " + std::to_string(u));
        s.v_.insert(it, u);
        return s;
    }

    /// All codimension-1 faces, ordered by the omitted position.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        out.reserve(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(without(v_[i]));
        return out;
    }

    std::string str() const { return to_string_raw(v_); }

    // Canonical order inside a dimension is plain lexicographic on the
    // vertex sequence; across dimensions callers compare dims first.
    friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

private:
    static std::string to_string_raw(const std::vector<VertexId>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        s += "}";
        return s;
    }

    std::vector<VertexId> v_;
};

/// Enumerates all (k+1)-subsets of s in lexicographic order.
inline std::vector<Simplex> subfaces_of_dim(const Simplex& s, int k) {
    std::vector<Simplex> out;
    const int m = static_cast<int>(s.card());
    const int c = k + 1;
    if (c < 0 || c > m) return out;
    if (c == 0) {
        out.push_back(Simplex{});
        return out;
    }
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> verts(c);
        for (int i = 0; i < c; ++i) verts[i] = s[idx[i]];
        Simplex f;
        f = Simplex(std::move(verts));
        out.push_back(std::move(f));
        int i = c - 1;
        while (i >= 0 && idx[i] == m - c + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace hdx
