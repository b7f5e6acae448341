#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"

namespace hdx {

enum class SubspaceKind { Coboundaries, Cocycles };  // B^k, Z^k

/// Reduced row echelon basis of B^k or Z^k inside C^k. Basis vectors are
/// cochains; pivots[i] is the leading cell index of basis[i], strictly
/// increasing. For coboundaries each basis vector carries a preimage in
/// C^{k-1} with d(preimage) = basis vector, maintained through the
/// elimination, so cofilling searches get exact preimages for free.
struct SubspaceBasis {
    int k = 0;
    SubspaceKind kind = SubspaceKind::Coboundaries;
    std::vector<Cochain> basis;
    std::vector<std::size_t> pivots;
    std::vector<Cochain> preimages;  // only for Coboundaries

    std::size_t dim() const { return basis.size(); }

    /// Reduces phi by the basis: XORs away every pivot bit. The result is the
    /// canonical coset representative; phi lies in the span iff it reduces
    /// to zero.
    Cochain reduce(Cochain phi) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (phi.get(pivots[i])) phi.xor_with(basis[i]);
        return phi;
    }

    /// Reduce while tracking the combination: returns (residue, combo) where
    /// combo is the XOR of preimages of the basis vectors used. Requires
    /// preimages (Coboundaries basis).
    std::pair<Cochain, Cochain> reduce_with_preimage(Cochain phi, const Cochain& zero_pre) const {
        Cochain combo = zero_pre;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (phi.get(pivots[i])) {
                phi.xor_with(basis[i]);
                combo.xor_with(preimages[i]);
            }
        return {std::move(phi), std::move(combo)};
    }

    bool contains(const Cochain& phi) const { return reduce(phi).is_zero(); }
};

namespace detail {

/// Gaussian elimination to RREF over F2 on (vector, tag) pairs; tags ride
/// along row operations. Deterministic: pivots claimed in ascending cell
/// order, then back-substituted.
inline void rref_with_tags(std::vector<Cochain>& rows, std::vector<Cochain>& tags,
                           std::vector<std::size_t>& pivots_out) {
    std::vector<Cochain> basis, btags;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Cochain v = rows[r];
        Cochain t = tags[r];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(pivots[i])) {
                v.xor_with(basis[i]);
                t.xor_with(btags[i]);
            }
        if (v.is_zero()) continue;
        std::size_t piv = v.size();
        v.for_each_set([&](std::size_t i) {
            if (i < piv) piv = i;
        });
        // back-substitute into existing rows to reach reduced form
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].get(piv)) {
                basis[i].xor_with(v);
                btags[i].xor_with(t);
            }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        basis.insert(basis.begin() + pos, std::move(v));
        btags.insert(btags.begin() + pos, std::move(t));
        pivots.insert(pivots.begin() + pos, piv);
    }
    rows = std::move(basis);
    tags = std::move(btags);
    pivots_out = std::move(pivots);
}

}  // namespace detail

/// Basis of B^k = im d_{k-1} or Z^k = ker d_k, -1 <= k <= n. Conventions:
/// B^{-1} = {0} (nothing below the empty simplex) and Z^n = C^n (no
/// coboundary above top dimension).
inline SubspaceBasis subspace_basis(const WeightedComplex& X, int k, SubspaceKind kind) {
    const int n = X.dimension();
    if (k < -1 || k > n) throw BadDimension("subspace dimension " + std::to_string(k));
    SubspaceBasis S;
    S.k = k;
    S.kind = kind;
    if (kind == SubspaceKind::Coboundaries) {
        if (k == -1) return S;  // empty basis
        std::vector<Cochain> rows, tags;
        for (std::size_t i = 0; i < X.count(k - 1); ++i) {
            Cochain e = Cochain::zero(X, k - 1);
            e.set(i, true);
            rows.push_back(differential(X, e));
            tags.push_back(std::move(e));
        }
        detail::rref_with_tags(rows, tags, S.pivots);
        S.basis = std::move(rows);
        S.preimages = std::move(tags);
        return S;
    }
    // Cocycles: eliminate images of the unit vectors of C^k; rows that
    // reduce to zero have tags spanning the kernel. A second RREF pass puts
    // the kernel basis itself in reduced form.
    std::vector<Cochain> kernel;
    if (k == n) {
        for (std::size_t i = 0; i < X.count(k); ++i) {
            Cochain e = Cochain::zero(X, k);
            e.set(i, true);
            kernel.push_back(std::move(e));
        }
    } else {
        std::vector<Cochain> basis, btags;
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < X.count(k); ++i) {
            Cochain e = Cochain::zero(X, k);
            e.set(i, true);
            Cochain v = differential(X, e);
            Cochain t = e;
            for (std::size_t bi = 0; bi < basis.size(); ++bi)
                if (v.get(pivots[bi])) {
                    v.xor_with(basis[bi]);
                    t.xor_with(btags[bi]);
                }
            if (v.is_zero()) {
                kernel.push_back(std::move(t));
                continue;
            }
            std::size_t piv = v.size();
            v.for_each_set([&](std::size_t q) {
                if (q < piv) piv = q;
            });
            basis.push_back(std::move(v));
            btags.push_back(std::move(t));
            pivots.push_back(piv);
        }
    }
    std::vector<Cochain> ktags(kernel.size());
    for (auto& t : ktags) t = Cochain(k, 0, X.hash());
    detail::rref_with_tags(kernel, ktags, S.pivots);
    S.basis = std::move(kernel);
    return S;
}

inline std::size_t cohomology_dim(const WeightedComplex& X, int k) {
    const auto Z = subspace_basis(X, k, SubspaceKind::Cocycles);
    const auto B = subspace_basis(X, k, SubspaceKind::Coboundaries);
    return Z.dim() - B.dim();
}

}  // namespace hdx
