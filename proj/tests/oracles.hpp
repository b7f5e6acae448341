#pragma once

// Reference evaluators used to pin expected values in the tests. Everything
// here is written straight from the definitions over plain uint64 bit masks:
// subspaces are materialized by full enumeration, distances and optima by
// scanning every state. No Gray walks, no elimination, no coset tricks, no
// caching, so agreement with the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

namespace oracle {

using hdx::ExtRational;
using hdx::Rational;
using hdx::WeightedComplex;

inline Rational mask_norm(const WeightedComplex& X, int k, std::uint64_t mask) {
    Rational s = 0;
    for (std::size_t i = 0; i < X.count(k); ++i)
        if (mask >> i & 1ull) s += X.weight(k, i);
    return s;
}

inline std::uint64_t mask_diff(const WeightedComplex& X, int k, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < X.count(k + 1); ++i) {
        unsigned par = 0;
        for (int f : X.facets_of(k + 1, i)) par ^= static_cast<unsigned>(mask >> f & 1ull);
        if (par) out |= 1ull << i;
    }
    return out;
}

/// All of B^k = d(C^{k-1}), deduplicated. Needs count(k-1) <= 24 or so.
inline std::vector<std::uint64_t> coboundaries(const WeightedComplex& X, int k) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = 1ull << X.count(k - 1);
    for (std::uint64_t psi = 0; psi < total; ++psi) out.push_back(mask_diff(X, k - 1, psi));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All of Z^k (kernel of d, all of C^k when k is the top dimension).
inline std::vector<std::uint64_t> cocycles(const WeightedComplex& X, int k) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = 1ull << X.count(k);
    for (std::uint64_t phi = 0; phi < total; ++phi)
        if (k == X.dimension() || mask_diff(X, k, phi) == 0) out.push_back(phi);
    return out;
}

inline Rational dist_to(const WeightedComplex& X, int k, std::uint64_t phi,
                        const std::vector<std::uint64_t>& S) {
    bool first = true;
    Rational best = 0;
    for (const std::uint64_t s : S) {
        const Rational d = mask_norm(X, k, phi ^ s);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

/// min ||d phi|| / dist(phi, S) over phi outside S; +inf when S = C^k.
inline ExtRational min_ratio(const WeightedComplex& X, int k,
                             const std::vector<std::uint64_t>& S) {
    const std::uint64_t total = 1ull << X.count(k);
    bool found = false;
    Rational best = 0;
    for (std::uint64_t phi = 0; phi < total; ++phi) {
        const Rational dist = dist_to(X, k, phi, S);
        if (dist == 0) continue;
        const Rational ratio = mask_norm(X, k + 1, mask_diff(X, k, phi)) / dist;
        if (!found || ratio < best) best = ratio;
        found = true;
    }
    return found ? ExtRational::of(best) : ExtRational::inf();
}

inline ExtRational coboundary_expansion(const WeightedComplex& X, int k) {
    return min_ratio(X, k, coboundaries(X, k));
}

inline ExtRational cocycle_expansion(const WeightedComplex& X, int k) {
    return min_ratio(X, k, cocycles(X, k));
}

/// max over beta in B^{k+1} \ {0} of (cheapest filling of beta)/||beta||;
/// 0 when B^{k+1} is trivial.
inline ExtRational cofilling(const WeightedComplex& X, int k) {
    Rational best = 0;
    const std::uint64_t total = 1ull << X.count(k);
    for (const std::uint64_t beta : coboundaries(X, k + 1)) {
        if (beta == 0) continue;
        bool first = true;
        Rational fill = 0;
        for (std::uint64_t phi = 0; phi < total; ++phi) {
            if (mask_diff(X, k, phi) != beta) continue;
            const Rational nrm = mask_norm(X, k, phi);
            if (first || nrm < fill) fill = nrm;
            first = false;
        }
        const Rational ratio = fill / mask_norm(X, k + 1, beta);
        if (ratio > best) best = ratio;
    }
    return ExtRational::of(best);
}

/// min ||z|| over cocycles outside B^k; +inf when H^k = 0.
inline ExtRational systole(const WeightedComplex& X, int k) {
    const auto B = coboundaries(X, k);
    bool found = false;
    Rational best = 0;
    for (const std::uint64_t z : cocycles(X, k)) {
        if (std::binary_search(B.begin(), B.end(), z)) continue;
        const Rational nrm = mask_norm(X, k, z);
        if (!found || nrm < best) best = nrm;
        found = true;
    }
    return found ? ExtRational::of(best) : ExtRational::inf();
}

}  // namespace oracle
