#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"
#include "hdx/simplex.hpp"

namespace hdx {

/// Full complex on v vertices 0..v-1 (one top cell), unit top weight.
inline WeightedComplex full_simplex(int v) {
    if (v < 1) throw BadArgs("full_simplex needs v >= 1");
    std::vector<VertexId> verts(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) verts[static_cast<std::size_t>(i)] = i;
    return WeightedComplex::build({Simplex(verts)}, WeightKind::Homogeneous);
}

/// Boundary of the (v-1)-simplex: all (v-1)-subsets of v vertices as tops.
inline WeightedComplex hollow_simplex(int v) {
    if (v < 2) throw BadArgs("hollow_simplex needs v >= 2");
    std::vector<VertexId> verts(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) verts[static_cast<std::size_t>(i)] = i;
    return WeightedComplex::build(subfaces_of_dim(Simplex(verts), v - 2),
                                  WeightKind::Homogeneous);
}

/// Incidence complex of the projective plane over F_q: vertices are the
/// points then the lines of PG(2, q), edges are the incident pairs (flags).
/// Points and lines are the lex-ordered normalized triples over F_q (first
/// nonzero coordinate 1); a point (x,y,z) lies on a line (a,b,c) when
/// ax + by + cz = 0 mod q. q=2 yields the Heawood graph: 14 vertices and
/// 21 edges.
inline WeightedComplex projective_plane_flag(int q) {
    if (q != 2 && q != 3) throw UnsupportedQ("projective_plane_flag supports q in {2, 3}");
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                const int first = x != 0 ? x : (y != 0 ? y : z);
                if (first != 1) continue;
                reps.push_back({x, y, z});
            }
    const int npts = static_cast<int>(reps.size());  // q^2 + q + 1
    std::vector<Simplex> tops;
    for (int i = 0; i < npts; ++i)
        for (int j = 0; j < npts; ++j) {
            const int dot = reps[static_cast<std::size_t>(i)][0] * reps[static_cast<std::size_t>(j)][0] +
                            reps[static_cast<std::size_t>(i)][1] * reps[static_cast<std::size_t>(j)][1] +
                            reps[static_cast<std::size_t>(i)][2] * reps[static_cast<std::size_t>(j)][2];
            if (dot % q == 0) tops.push_back(Simplex({i, npts + j}));
        }
    return WeightedComplex::build(tops, WeightKind::Homogeneous);
}

/// Random complex: full (n-1)-skeleton on v vertices plus each n-cell kept
/// independently with probability p, then pruned to a pure complex (faces
/// not under a surviving n-cell are dropped; the standard model would keep
/// the whole skeleton). One generator draw per candidate in lex order, so
/// the result is a function of (n, v, p, seed).
inline WeightedComplex linial_meshulam(int n, int v, const Rational& p, std::uint64_t seed) {
    if (n < 1 || v <= n) throw BadArgs("linial_meshulam needs v > n >= 1");
    if (!(p > 0 && p <= 1)) throw BadArgs("linial_meshulam needs p in (0, 1]");
    std::vector<VertexId> verts(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) verts[static_cast<std::size_t>(i)] = i;
    const auto candidates = subfaces_of_dim(Simplex(verts), n);

    std::vector<Simplex> tops;
    if (p == 1) {
        tops = candidates;
    } else {
        const Integer num = numerator(p), den = denominator(p);
        if (den > Integer(std::numeric_limits<std::uint64_t>::max()))
            throw BadArgs("linial_meshulam: p denominator too large");
        const auto num64 = num.convert_to<std::uint64_t>();
        const auto den64 = den.convert_to<std::uint64_t>();
        // keep iff draw < floor(p * 2^64); exact since p < 1 keeps it under 2^64
        const unsigned __int128 threshold =
            (static_cast<unsigned __int128>(num64) << 64) / den64;
        std::mt19937_64 rng(seed);
        for (const auto& c : candidates)
            if (static_cast<unsigned __int128>(rng()) < threshold) tops.push_back(c);
    }
    if (tops.empty()) throw EmptyTopLevel("no top cell survived the sampling");
    return WeightedComplex::build(tops, WeightKind::Homogeneous);
}

/// Simplicial join: tops are all unions of a top of X with a top of Y, with
/// Y's vertex ids shifted above X's. Dimension n_X + n_Y + 1, unit weights.
inline WeightedComplex join(const WeightedComplex& X, const WeightedComplex& Y) {
    const VertexId shift = X.cells(0).back()[0] + 1;
    std::vector<Simplex> tops;
    for (const auto& sx : X.cells(X.dimension()))
        for (const auto& sy : Y.cells(Y.dimension())) {
            std::vector<VertexId> verts = sx.verts();
            for (const VertexId u : sy.verts()) verts.push_back(u + shift);
            tops.emplace_back(verts);
        }
    return WeightedComplex::build(tops, WeightKind::Homogeneous);
}

/// Declarative generator description; Join and Skeleton nest via `parts`.
/// FromFile is resolved by the io layer, not here.
struct GeneratorSpec {
    enum class Kind {
        FullSimplex,
        Skeleton,
        HollowSimplex,
        Join,
        LinialMeshulam,
        ProjectivePlaneFlag,
        FromFile
    };
    Kind kind = Kind::FullSimplex;
    int v = 0;
    int n = 0;
    int q = 0;
    int l = 0;
    Rational p;
    std::uint64_t seed = 0;
    std::string path;
    std::vector<GeneratorSpec> parts;
};

inline WeightedComplex generate(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    switch (spec.kind) {
        case Kind::FullSimplex: return full_simplex(spec.v);
        case Kind::HollowSimplex: return hollow_simplex(spec.v);
        case Kind::ProjectivePlaneFlag: return projective_plane_flag(spec.q);
        case Kind::LinialMeshulam: return linial_meshulam(spec.n, spec.v, spec.p, spec.seed);
        case Kind::Skeleton: {
            if (spec.parts.size() != 1) throw BadArgs("Skeleton spec needs one base part");
            return generate(spec.parts[0]).skeleton(spec.l, WeightKind::Homogeneous);
        }
        case Kind::Join: {
            if (spec.parts.size() != 2) throw BadArgs("Join spec needs two parts");
            return join(generate(spec.parts[0]), generate(spec.parts[1]));
        }
        case Kind::FromFile: throw BadArgs("FromFile specs are resolved by the io layer");
    }
    throw BadArgs("unknown generator kind");
}

}  // namespace hdx
