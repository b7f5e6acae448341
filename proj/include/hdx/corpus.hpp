#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/generators.hpp"

namespace hdx {

struct CorpusEntry {
    std::string name;
    WeightedComplex X;
};

namespace detail {

inline WeightedComplex points(int m) {
    std::vector<Simplex> tops;
    for (VertexId v = 0; v < m; ++v) tops.push_back(Simplex{v});
    return WeightedComplex::build(std::move(tops), WeightKind::Homogeneous);
}

inline WeightedComplex graph_of(std::vector<std::pair<VertexId, VertexId>> edges) {
    std::vector<Simplex> tops;
    for (const auto& [u, v] : edges) tops.push_back(Simplex{u, v});
    return WeightedComplex::build(std::move(tops), WeightKind::Homogeneous);
}

inline WeightedComplex cycle_graph(int m) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
    return graph_of(std::move(edges));
}

inline WeightedComplex petersen() {
    return graph_of({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                     {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// Minimal 6-vertex triangulation of the real projective plane; each edge
// lies in exactly two triangles and H^1 over F_2 is nontrivial, so systole_1
// is finite here.
inline WeightedComplex rp2_six() {
    std::vector<Simplex> tops = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                 {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return WeightedComplex::build(std::move(tops), WeightKind::Homogeneous);
}

inline WeightedComplex custom(std::vector<Simplex> tops, std::vector<std::string> weights) {
    std::vector<Rational> w;
    for (const auto& s : weights) w.push_back(parse_rational(s));
    return WeightedComplex::build(std::move(tops), WeightKind::Custom, std::move(w));
}

}  // namespace detail

/// The default corpus: >= 50 named complexes of dimensions 1..4, each with
/// at most 200 top cells, mixing exact fixtures (simplices, spheres, flag
/// complexes of PG(2,2), a projective plane, joins), custom-weight
/// instances, and seeded random complexes. 1-skeleton vertex counts stay
/// <= 14 so that exhaustive cochain enumerations stay cheap.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        using detail::custom;
        using detail::cycle_graph;
        using detail::graph_of;
        using detail::points;
        std::vector<CorpusEntry> c;
        auto add = [&](std::string name, WeightedComplex X) {
            c.push_back({std::move(name), std::move(X)});
        };

        add("edge", full_simplex(2));
        add("triangle-full", full_simplex(3));
        add("tetrahedron", full_simplex(4));
        add("simplex-4d", full_simplex(5));

        add("hollow-triangle", hollow_simplex(3));
        add("hollow-tetrahedron", hollow_simplex(4));
        add("sphere-3d", hollow_simplex(5));
        add("sphere-4d", hollow_simplex(6));

        add("k4-graph", full_simplex(4).skeleton(1, WeightKind::Homogeneous));
        add("k5-graph", full_simplex(5).skeleton(1, WeightKind::Homogeneous));
        add("k6-graph", full_simplex(6).skeleton(1, WeightKind::Homogeneous));
        add("k7-graph", full_simplex(7).skeleton(1, WeightKind::Homogeneous));
        add("k6-2skeleton", full_simplex(6).skeleton(2, WeightKind::Homogeneous));
        add("k7-2skeleton", full_simplex(7).skeleton(2, WeightKind::Homogeneous));
        add("k7-3skeleton", full_simplex(7).skeleton(3, WeightKind::Homogeneous));
        add("k8-2skeleton", full_simplex(8).skeleton(2, WeightKind::Homogeneous));
        add("k8-3skeleton", full_simplex(8).skeleton(3, WeightKind::Homogeneous));

        add("fano-flag", projective_plane_flag(2));

        WeightedComplex glued = WeightedComplex::build({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}},
                                                       WeightKind::Homogeneous);
        add("glued-tetrahedra", glued);
        add("glued-tetrahedra-2skeleton", glued.skeleton(2, WeightKind::Homogeneous));
        add("rp2-6", detail::rp2_six());

        add("k33", join(points(3), points(3)));
        add("k23", join(points(2), points(3)));
        add("octahedron", join(points(2), join(points(2), points(2))));
        add("octahedron-1skeleton",
            join(points(2), join(points(2), points(2))).skeleton(1, WeightKind::Homogeneous));
        add("cone-c3", join(points(1), hollow_simplex(3)));
        add("cone-k4-graph", join(points(1), full_simplex(4).skeleton(1, WeightKind::Homogeneous)));
        add("cone-octahedron", join(points(1), join(points(2), join(points(2), points(2)))));
        add("suspension-c3", join(points(2), hollow_simplex(3)));
        add("suspension-k4-graph",
            join(points(2), full_simplex(4).skeleton(1, WeightKind::Homogeneous)));
        add("edge-join-c3", join(full_simplex(2), hollow_simplex(3)));
        add("c3-join-c3", join(hollow_simplex(3), hollow_simplex(3)));

        add("path-4", graph_of({{0, 1}, {1, 2}, {2, 3}}));
        add("cycle-5", cycle_graph(5));
        add("cycle-6", cycle_graph(6));
        add("star-5", graph_of({{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
        add("petersen", detail::petersen());

        add("custom-triangle", custom({Simplex{0, 1, 2}}, {"5/3"}));
        add("custom-two-triangles", custom({Simplex{0, 1, 2}, Simplex{1, 2, 3}}, {"1/2", "3"}));
        add("custom-glued-tetrahedra",
            custom({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}}, {"2", "1"}));
        add("custom-c4", custom({Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}, Simplex{0, 3}},
                                {"1", "1/2", "1/3", "1/4"}));
        add("custom-fan", custom({Simplex{0, 1, 2}, Simplex{0, 2, 3}, Simplex{0, 3, 4}},
                                 {"7", "7/2", "21/5"}));

        add("lm-graph-6", linial_meshulam(1, 6, Rational(2, 3), 11));
        add("lm-graph-8", linial_meshulam(1, 8, Rational(1, 2), 12));
        add("lm-graph-10", linial_meshulam(1, 10, Rational(1, 2), 13));
        add("lm-graph-12", linial_meshulam(1, 12, Rational(2, 5), 14));
        add("lm-2-6-a", linial_meshulam(2, 6, Rational(1, 2), 21));
        add("lm-2-6-b", linial_meshulam(2, 6, Rational(2, 3), 22));
        add("lm-2-7-a", linial_meshulam(2, 7, Rational(1, 2), 23));
        add("lm-2-7-b", linial_meshulam(2, 7, Rational(3, 5), 24));
        add("lm-2-8", linial_meshulam(2, 8, Rational(2, 5), 25));
        add("lm-3-6-a", linial_meshulam(3, 6, Rational(1, 2), 31));
        add("lm-3-6-b", linial_meshulam(3, 6, Rational(3, 4), 32));
        add("lm-3-7", linial_meshulam(3, 7, Rational(2, 5), 33));
        add("lm-4-7", linial_meshulam(4, 7, Rational(1, 2), 41));
        add("lm-4-8", linial_meshulam(4, 8, Rational(2, 5), 42));

        return c;
    }();
    return entries;
}

inline const WeightedComplex& corpus_complex(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e.X;
    throw BadArgs("no corpus entry named '" + name + "'");
}

}  // namespace hdx
