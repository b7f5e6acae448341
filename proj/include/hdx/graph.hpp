#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/rational.hpp"

namespace hdx {

/// Weighted graph in the sense used throughout: positive edge weights,
/// vertex weights derived as m(v) = sum of m(e) over edges at v. This
/// matches the 1-skeleton of any weighted complex (balancing law at k = 0).
struct WeightedGraph {
    std::vector<VertexId> vertices;            // sorted ids
    std::vector<std::pair<int, int>> edges;    // index pairs, u < v
    std::vector<Rational> edge_weight;
    std::vector<Rational> vertex_weight;       // derived

    std::size_t order() const { return vertices.size(); }

    static WeightedGraph from_edge_list(std::vector<VertexId> verts,
                                        std::vector<std::pair<VertexId, VertexId>> edge_ids,
                                        std::vector<Rational> weights) {
        if (edge_ids.size() != weights.size()) throw BadArgs("edge/weight size mismatch");
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        WeightedGraph G;
        G.vertices = std::move(verts);
        auto idx = [&G](VertexId v) {
            auto it = std::lower_bound(G.vertices.begin(), G.vertices.end(), v);
            if (it == G.vertices.end() || *it != v) throw BadArgs("edge endpoint not a vertex");
            return static_cast<int>(it - G.vertices.begin());
        };
        for (std::size_t e = 0; e < edge_ids.size(); ++e) {
            if (weights[e] <= 0) throw NonPositiveWeight("edge weight " + format_rational(weights[e]));
            int u = idx(edge_ids[e].first), v = idx(edge_ids[e].second);
            if (u == v) throw BadArgs("loop edge");
            if (u > v) std::swap(u, v);
            G.edges.emplace_back(u, v);
            G.edge_weight.push_back(weights[e]);
        }
        G.derive_vertex_weights();
        return G;
    }

    static WeightedGraph from_complex_skeleton(const WeightedComplex& X) {
        WeightedGraph G;
        for (const auto& v : X.cells(0)) G.vertices.push_back(v[0]);
        if (X.dimension() >= 1) {
            for (std::size_t i = 0; i < X.count(1); ++i) {
                const auto& e = X.cell(1, i);
                auto u = std::lower_bound(G.vertices.begin(), G.vertices.end(), e[0]);
                auto w = std::lower_bound(G.vertices.begin(), G.vertices.end(), e[1]);
                G.edges.emplace_back(static_cast<int>(u - G.vertices.begin()),
                                     static_cast<int>(w - G.vertices.begin()));
                G.edge_weight.push_back(X.weight(1, i));
            }
        }
        G.derive_vertex_weights();
        return G;
    }

    void derive_vertex_weights() {
        vertex_weight.assign(vertices.size(), Rational(0));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            vertex_weight[edges[e].first] += edge_weight[e];
            vertex_weight[edges[e].second] += edge_weight[e];
        }
    }

    Rational total_vertex_weight() const {
        return std::accumulate(vertex_weight.begin(), vertex_weight.end(), Rational(0));
    }

    /// Connected component count by union-find; no spectral shortcut.
    int component_count() const {
        std::vector<int> parent(vertices.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> rank_(vertices.size(), 0);
        auto find = [&parent](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        int comps = static_cast<int>(vertices.size());
        for (const auto& [u, v] : edges) {
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;
            if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
            parent[rv] = ru;
            if (rank_[ru] == rank_[rv]) ++rank_[ru];
            --comps;
        }
        return comps;
    }

    bool connected() const { return order() > 0 && component_count() == 1; }
};

/// Eigenvalues of the normalized upper Laplacian on functions, ascending.
/// The operator I - D^{-1}A is similar to the symmetric I - D^{-1/2}AD^{-1/2},
/// which is what actually gets diagonalized.
inline std::vector<double> laplacian_spectrum(const WeightedGraph& G) {
    const std::size_t m = G.order();
    if (m == 0) throw BadArgs("spectrum of empty graph");
    for (const auto& w : G.vertex_weight)
        if (w <= 0) throw BadArgs("isolated vertex has zero weight; Laplacian undefined");
    Eigen::MatrixXd N = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                  static_cast<Eigen::Index>(m));
    std::vector<double> invsqrt(m);
    for (std::size_t i = 0; i < m; ++i) invsqrt[i] = 1.0 / std::sqrt(to_double(G.vertex_weight[i]));
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        const auto [u, v] = G.edges[e];
        const double a = to_double(G.edge_weight[e]) * invsqrt[u] * invsqrt[v];
        N(u, v) -= a;
        N(v, u) -= a;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(N, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m);
    std::sort(out.begin(), out.end());
    return out;
}

/// Second-smallest normalized Laplacian eigenvalue of a connected graph.
inline double spectral_gap(const WeightedGraph& G) {
    if (!G.connected()) throw Disconnected("graph has " + std::to_string(G.component_count()) +
                                           " components");
    if (G.order() < 2) throw BadArgs("spectral gap needs at least two vertices");
    return laplacian_spectrum(G)[1];
}

struct CheegerRecord {
    Rational cut;          // m(U, V\U), exact
    Rational inner;        // m(U, U), exact
    Rational weight_u;     // m(U)
    Rational weight_rest;  // m(V\U)
    double lambda;
    double bound_cut_rhs;    // lambda * m(U) m(V\U) / m(V)
    double bound_inner_lhs;  // m(U)/2 * (1 - lambda m(V\U)/m(V))
    bool cut_ok;
    bool inner_ok;
};

/// Checks both Cheeger-type inequalities for a vertex subset U given by
/// indices into G.vertices. Cut and inner weights are exact; the spectral
/// side is float with tolerance.
inline CheegerRecord cheeger_check(const WeightedGraph& G, const std::vector<int>& u_idx,
                                   double tol = 1e-9) {
    if (!G.connected()) throw Disconnected("Cheeger bound needs a connected graph");
    std::vector<char> in(G.order(), 0);
    for (int i : u_idx) {
        if (i < 0 || static_cast<std::size_t>(i) >= G.order()) throw BadArgs("vertex index");
        in[i] = 1;
    }
    const std::size_t usz = std::count(in.begin(), in.end(), char(1));
    if (usz == 0 || usz == G.order()) throw EmptyOrFullSubset("U must be proper and nonempty");

    CheegerRecord r;
    r.cut = 0;
    r.inner = 0;
    r.weight_u = 0;
    r.weight_rest = 0;
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        const auto [a, b] = G.edges[e];
        if (in[a] && in[b]) r.inner += G.edge_weight[e];
        else if (in[a] != in[b]) r.cut += G.edge_weight[e];
    }
    for (std::size_t i = 0; i < G.order(); ++i)
        (in[i] ? r.weight_u : r.weight_rest) += G.vertex_weight[i];

    r.lambda = spectral_gap(G);
    const double mu = to_double(r.weight_u), mr = to_double(r.weight_rest);
    const double mv = mu + mr;
    r.bound_cut_rhs = r.lambda * mu * mr / mv;
    r.bound_inner_lhs = mu / 2.0 * (1.0 - r.lambda * mr / mv);
    r.cut_ok = to_double(r.cut) >= r.bound_cut_rhs - tol;
    r.inner_ok = to_double(r.inner) <= r.bound_inner_lhs + tol;
    return r;
}

}  // namespace hdx
