#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdx/errors.hpp"
#include "hdx/rational.hpp"
#include "hdx/simplex.hpp"

namespace hdx {

enum class WeightKind { Homogeneous, NormalizedHomogeneous, Custom };

inline const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Homogeneous: return "homogeneous";
        case WeightKind::NormalizedHomogeneous: return "normalized_homogeneous";
        case WeightKind::Custom: return "custom";
    }
    return "?";
}

/// A pure n-dimensional weighted simplicial complex.
///
/// Cells are stored per dimension (including the empty simplex at dim -1)
/// in lexicographic order; that order is the canonical index space every
/// other module relies on (bit positions of cochains, witness tie-breaking,
/// report layouts). Weights are exact rationals assigned on the top cells
/// and propagated downward by m(tau) = sum of m over cofacets of tau, so
/// the balancing law holds by construction; validate() re-checks it against
/// the closed form (n-k)! * sum of top weights over tops containing tau,
/// which is an independent route through the data.
class WeightedComplex {
public:
    static WeightedComplex build(std::vector<Simplex> tops, WeightKind kind,
                                 std::vector<Rational> custom_weights = {}) {
        if (tops.empty()) throw BadArgs("complex needs at least one top simplex");
        const int n = tops.front().dim();
        for (const auto& t : tops)
            if (t.dim() != n)
                throw MixedDimension("top simplices of dims " + std::to_string(n) + " and " +
                                     std::to_string(t.dim()));
        if (kind == WeightKind::Custom) {
            if (custom_weights.size() != tops.size())
                throw BadArgs("custom weights: got " + std::to_string(custom_weights.size()) +
                              ", need " + std::to_string(tops.size()));
            for (const auto& w : custom_weights)
                if (w <= 0) throw NonPositiveWeight("top weight " + format_rational(w));
        } else if (!custom_weights.empty()) {
            throw BadArgs("weights supplied but kind is not custom");
        }

        // Canonical order for tops, carrying custom weights along.
        std::vector<std::size_t> perm(tops.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return tops[a] < tops[b]; });
        std::vector<Simplex> sorted_tops;
        sorted_tops.reserve(tops.size());
        std::vector<Rational> sorted_w;
        for (std::size_t i : perm) {
            sorted_tops.push_back(tops[i]);
            if (kind == WeightKind::Custom) sorted_w.push_back(custom_weights[i]);
        }
        for (std::size_t i = 1; i < sorted_tops.size(); ++i)
            if (sorted_tops[i] == sorted_tops[i - 1])
                throw DuplicateTopSimplex(sorted_tops[i].str());

        WeightedComplex X;
        X.n_ = n;
        X.kind_ = kind;
        X.cells_.resize(n + 2);
        X.cells_[n + 1] = std::move(sorted_tops);

        // Downward closure, one level at a time: the k-cells are exactly the
        // facets of the (k+1)-cells because the complex is pure.
        for (int k = n - 1; k >= -1; --k) {
            std::vector<Simplex> level;
            for (const auto& s : X.cells_[k + 2])
                for (auto& f : s.facets()) level.push_back(std::move(f));
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
            X.cells_[k + 1] = std::move(level);
        }

        X.build_incidence();

        // Top weights, then exact downward propagation.
        X.weights_.assign(n + 2, {});
        const std::size_t ntop = X.cells_[n + 1].size();
        switch (kind) {
            case WeightKind::Homogeneous:
                X.weights_[n + 1].assign(ntop, Rational(1));
                break;
            case WeightKind::NormalizedHomogeneous:
                X.weights_[n + 1].assign(ntop, Rational(1, static_cast<long>(ntop)));
                break;
            case WeightKind::Custom:
                X.weights_[n + 1] = std::move(sorted_w);
                break;
        }
        for (int k = n - 1; k >= -1; --k) {
            auto& w = X.weights_[k + 1];
            w.assign(X.cells_[k + 1].size(), Rational(0));
            for (std::size_t i = 0; i < w.size(); ++i)
                for (int j : X.cofacets_[k + 1][i]) w[i] += X.weights_[k + 2][j];
        }

        X.hash_ = X.compute_hash();
        return X;
    }

    int dimension() const { return n_; }
    WeightKind kind() const { return kind_; }
    std::uint64_t hash() const { return hash_; }

    const std::vector<Simplex>& cells(int k) const {
        check_dim(k);
        return cells_[k + 1];
    }
    std::size_t count(int k) const { return cells(k).size(); }

    const Simplex& cell(int k, std::size_t i) const { return cells(k)[i]; }

    const Rational& weight(int k, std::size_t i) const {
        check_dim(k);
        return weights_[k + 1][i];
    }
    const std::vector<Rational>& weights(int k) const {
        check_dim(k);
        return weights_[k + 1];
    }

    /// Index of s among the cells of its dimension, if present.
    std::optional<std::size_t> index_of(const Simplex& s) const {
        const int k = s.dim();
        if (k < -1 || k > n_) return std::nullopt;
        const auto& lvl = cells_[k + 1];
        auto it = std::lower_bound(lvl.begin(), lvl.end(), s);
        if (it == lvl.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - lvl.begin());
    }

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    const Rational& weight_of(const Simplex& s) const {
        auto idx = index_of(s);
        if (!idx) throw SimplexNotInComplex(s.str());
        return weights_[s.dim() + 1][*idx];
    }

    /// Facet indices (dim k-1) of cell i of dim k.
    const std::vector<int>& facets_of(int k, std::size_t i) const {
        check_dim(k);
        return facets_[k + 1][i];
    }
    /// Cofacet indices (dim k+1) of cell i of dim k.
    const std::vector<int>& cofacets_of(int k, std::size_t i) const {
        check_dim(k);
        return cofacets_[k + 1][i];
    }

    Rational total_weight(int k) const {
        check_dim(k);
        Rational t = 0;
        for (const auto& w : weights_[k + 1]) t += w;
        return t;
    }

    /// Link X_tau with the induced weights m_tau(sigma) = m(tau u sigma).
    /// Built from its own top cells {eta \ tau : eta top, tau <= eta} with
    /// custom weights m(eta); the propagation then reproduces the induced
    /// weights on every lower cell (checked by the lemma suite).
    WeightedComplex link(const Simplex& tau) const {
        if (!contains(tau)) throw SimplexNotInComplex(tau.str());
        if (tau.dim() >= n_) throw BadDimension("link of a top-dimensional simplex");
        std::vector<Simplex> tops;
        std::vector<Rational> w;
        const auto& top_cells = cells_[n_ + 1];
        for (std::size_t i = 0; i < top_cells.size(); ++i) {
            if (tau.subset_of(top_cells[i])) {
                tops.push_back(top_cells[i].minus(tau));
                w.push_back(weights_[n_ + 1][i]);
            }
        }
        return build(std::move(tops), WeightKind::Custom, std::move(w));
    }

    /// The l-skeleton, re-weighted over its own top (= l-) cells.
    /// Custom keeps the weights this complex induces on dimension l, which
    /// still satisfy the balancing law below level l.
    WeightedComplex skeleton(int l, WeightKind kind) const {
        if (l < 0 || l > n_) throw BadDimension("skeleton level " + std::to_string(l));
        std::vector<Simplex> tops = cells_[l + 1];
        std::vector<Rational> w;
        if (kind == WeightKind::Custom) w = weights_[l + 1];
        return build(std::move(tops), kind, std::move(w));
    }

    void validate() const {
        validate_parts(n_, cells_, weights_);
    }

    /// Structure and weight-law checks on raw per-dimension tables, so tests
    /// can probe corrupted data without going through build(). Throws
    /// ValidationError naming the first offending simplex.
    static void validate_parts(int n, const std::vector<std::vector<Simplex>>& cells,
                               const std::vector<std::vector<Rational>>& weights) {
        if (n < 0) throw ValidationError("negative dimension");
        if (cells.size() != static_cast<std::size_t>(n + 2) || weights.size() != cells.size())
            throw ValidationError("level tables do not match dimension");
        if (cells[0].size() != 1 || cells[0][0].dim() != -1)
            throw ValidationError("dimension -1 must hold exactly the empty simplex");
        for (int k = -1; k <= n; ++k) {
            const auto& lvl = cells[k + 1];
            if (lvl.empty()) throw ValidationError("no cells of dim " + std::to_string(k));
            if (lvl.size() != weights[k + 1].size())
                throw ValidationError("weight table size mismatch at dim " + std::to_string(k));
            for (std::size_t i = 0; i < lvl.size(); ++i) {
                if (lvl[i].dim() != k)
                    throw ValidationError("cell of wrong dimension: " + lvl[i].str());
                if (i > 0 && !(lvl[i - 1] < lvl[i]))
                    throw ValidationError("cells out of canonical order at " + lvl[i].str());
                if (weights[k + 1][i] <= 0)
                    throw ValidationError("non-positive weight on " + lvl[i].str());
            }
        }
        auto find_in = [&](const Simplex& s) -> std::optional<std::size_t> {
            const auto& lvl = cells[s.dim() + 1];
            auto it = std::lower_bound(lvl.begin(), lvl.end(), s);
            if (it == lvl.end() || *it != s) return std::nullopt;
            return static_cast<std::size_t>(it - lvl.begin());
        };
        // Closure: every facet of a cell is a cell.
        for (int k = 0; k <= n; ++k)
            for (const auto& s : cells[k + 1])
                for (const auto& f : s.facets())
                    if (!find_in(f)) throw ValidationError("missing face " + f.str());
        // Purity: every cell extends to a cofacet (hence to a top cell).
        for (int k = -1; k < n; ++k) {
            for (std::size_t i = 0; i < cells[k + 1].size(); ++i) {
                bool covered = false;
                for (const auto& s : cells[k + 2])
                    if (cells[k + 1][i].subset_of(s)) {
                        covered = true;
                        break;
                    }
                if (!covered)
                    throw ValidationError("cell not covered by any cofacet: " +
                                          cells[k + 1][i].str());
            }
        }
        // Route one: the one-step balancing law. Checked from the top level
        // down so the first violation is reported at the corrupted cell
        // itself, not at a face whose cofacet sum it disturbs.
        for (int k = n - 1; k >= -1; --k) {
            for (std::size_t i = 0; i < cells[k + 1].size(); ++i) {
                Rational sum = 0;
                for (std::size_t j = 0; j < cells[k + 2].size(); ++j)
                    if (cells[k + 1][i].subset_of(cells[k + 2][j])) sum += weights[k + 2][j];
                if (sum != weights[k + 1][i])
                    throw ValidationError("weight law fails at " + cells[k + 1][i].str() +
                                          ": stored " + format_rational(weights[k + 1][i]) +
                                          ", cofacet sum " + format_rational(sum));
            }
        }
        // Route two: the closed form against top weights directly.
        for (int k = -1; k < n; ++k) {
            const Rational fact(Integer(factorial_u64(n - k)));
            for (std::size_t i = 0; i < cells[k + 1].size(); ++i) {
                Rational sum = 0;
                for (std::size_t j = 0; j < cells[n + 1].size(); ++j)
                    if (cells[k + 1][i].subset_of(cells[n + 1][j])) sum += weights[n + 1][j];
                if (fact * sum != weights[k + 1][i])
                    throw ValidationError("closed-form weight fails at " + cells[k + 1][i].str());
            }
        }
    }

    /// Number of top cells containing each l-cell; used by skeleton_compare.
    std::vector<std::int64_t> top_cofacet_counts(int l) const {
        check_dim(l);
        std::vector<std::int64_t> cnt(cells_[l + 1].size(), 0);
        for (const auto& top : cells_[n_ + 1])
            for (const auto& f : subfaces_of_dim(top, l)) cnt[*index_of(f)] += 1;
        return cnt;
    }

private:
    void check_dim(int k) const {
        if (k < -1 || k > n_)
            throw BadDimension("dimension " + std::to_string(k) + " outside [-1, " +
                               std::to_string(n_) + "]");
    }

    void build_incidence() {
        facets_.assign(n_ + 2, {});
        cofacets_.assign(n_ + 2, {});
        for (int k = -1; k <= n_; ++k) {
            facets_[k + 1].assign(cells_[k + 1].size(), {});
            cofacets_[k + 1].assign(cells_[k + 1].size(), {});
        }
        for (int k = 0; k <= n_; ++k) {
            for (std::size_t i = 0; i < cells_[k + 1].size(); ++i) {
                for (const auto& f : cells_[k + 1][i].facets()) {
                    const auto fi = index_of(f);
                    facets_[k + 1][i].push_back(static_cast<int>(*fi));
                    cofacets_[k][*fi].push_back(static_cast<int>(i));
                }
            }
        }
    }

    std::uint64_t compute_hash() const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
        auto mix = [&h](std::uint64_t x) {
            for (int b = 0; b < 8; ++b) {
                h ^= (x >> (8 * b)) & 0xff;
                h *= 1099511628211ull;
            }
        };
        auto mix_str = [&h](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
        };
        mix(static_cast<std::uint64_t>(n_));
        const auto& tops = cells_[n_ + 1];
        mix(tops.size());
        for (std::size_t i = 0; i < tops.size(); ++i) {
            for (VertexId v : tops[i].verts()) mix(static_cast<std::uint64_t>(v));
            mix_str(format_rational(weights_[n_ + 1][i]));
        }
        return h;
    }

    int n_ = 0;
    WeightKind kind_ = WeightKind::Homogeneous;
    std::uint64_t hash_ = 0;
    std::vector<std::vector<Simplex>> cells_;           // [k+1] -> cells of dim k
    std::vector<std::vector<Rational>> weights_;        // parallel to cells_
    std::vector<std::vector<std::vector<int>>> facets_;
    std::vector<std::vector<std::vector<int>>> cofacets_;
};

inline std::string complex_hash_hex(const WeightedComplex& X) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(X.hash()));
    return std::string(buf);
}

}  // namespace hdx
