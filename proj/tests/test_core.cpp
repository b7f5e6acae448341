#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hdx/complex.hpp"
#include "hdx/corpus.hpp"
#include "hdx/graph.hpp"
#include "hdx/spectral.hpp"

using namespace hdx;

namespace {
const double kTol = 1e-9;
}

TEST_CASE("full triangle weights") {
    const auto X = WeightedComplex::build({Simplex{0, 1, 2}}, WeightKind::Homogeneous);
    REQUIRE(X.dimension() == 2);
    REQUIRE(X.count(-1) == 1);
    REQUIRE(X.count(0) == 3);
    REQUIRE(X.count(1) == 3);
    REQUIRE(X.count(2) == 1);
    CHECK(X.weight(2, 0) == 1);
    for (std::size_t e = 0; e < 3; ++e) CHECK(X.weight(1, e) == 1);
    for (std::size_t v = 0; v < 3; ++v) CHECK(X.weight(0, v) == 2);
    CHECK(X.weight(-1, 0) == 6);
    CHECK(X.total_weight(2) == 1);
    CHECK(X.total_weight(1) == 3);
    CHECK(X.total_weight(0) == 6);
    CHECK(X.total_weight(-1) == 6);
}

TEST_CASE("custom weights propagate") {
    const auto X = WeightedComplex::build({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}},
                                          WeightKind::Custom, {Rational(2), Rational(1)});
    CHECK(X.weight(2, *X.index_of(Simplex{1, 2, 3})) == 3);
    CHECK(X.weight(2, *X.index_of(Simplex{0, 1, 2})) == 2);
    CHECK(X.weight(2, *X.index_of(Simplex{2, 3, 4})) == 1);
    CHECK(X.weight(1, *X.index_of(Simplex{1, 2})) == 6);
    CHECK(X.weight(1, *X.index_of(Simplex{0, 1})) == 4);
    CHECK(X.weight(1, *X.index_of(Simplex{3, 4})) == 2);
    CHECK(X.weight(0, *X.index_of(Simplex{0})) == 12);
    CHECK(X.weight(0, *X.index_of(Simplex{1})) == 18);
    CHECK(X.weight(0, *X.index_of(Simplex{4})) == 6);
    CHECK(X.weight(-1, 0) == 72);
    CHECK(X.total_weight(0) == 72);
}

TEST_CASE("normalized homogeneous tops sum to one") {
    const auto X = WeightedComplex::build({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}},
                                          WeightKind::NormalizedHomogeneous);
    CHECK(X.total_weight(X.dimension()) == 1);
    CHECK(X.weight(3, 0) == Rational(1, 2));
    // the totals ladder still applies
    CHECK(X.total_weight(1) == Rational(factorial_u64(4), factorial_u64(2)));
}

TEST_CASE("summation law equals cofacet sums") {
    const auto& X = corpus_complex("rp2-6");
    for (int k = -1; k < X.dimension(); ++k)
        for (std::size_t i = 0; i < X.count(k); ++i) {
            Rational s = 0;
            for (int c : X.cofacets_of(k, i)) s += X.weight(k + 1, c);
            REQUIRE(s == X.weight(k, i));
        }
}

TEST_CASE("links carry induced weights") {
    const auto X = WeightedComplex::build({Simplex{0, 1, 2, 3}}, WeightKind::Homogeneous);
    const auto L = X.link(Simplex{0});
    REQUIRE(L.dimension() == 2);
    CHECK(L.weight(-1, 0) == X.weight(0, 0));
    CHECK(L.weight(1, *L.index_of(Simplex{1, 2})) == X.weight(2, *X.index_of(Simplex{0, 1, 2})));
    const auto LE = X.link(Simplex{1, 2});
    REQUIRE(LE.dimension() == 1);
    CHECK(LE.weight(-1, 0) == X.weight(1, *X.index_of(Simplex{1, 2})));
    CHECK_THROWS_AS(X.link(Simplex{0, 1, 2, 3}), BadDimension);
    CHECK_THROWS_AS(X.link(Simplex{7}), SimplexNotInComplex);
}

TEST_CASE("skeleton keeps induced custom weights") {
    const auto X = WeightedComplex::build({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}},
                                          WeightKind::Custom, {Rational(2), Rational(1)});
    const auto S = X.skeleton(1, WeightKind::Custom);
    REQUIRE(S.dimension() == 1);
    for (std::size_t i = 0; i < S.count(1); ++i)
        CHECK(S.weight(1, i) == X.weight(1, *X.index_of(S.cell(1, i))));
    // below the chopped level the balancing law re-derives the weights
    CHECK(S.weight(0, *S.index_of(Simplex{1})) ==
          Rational(1) * [&] {
              Rational s = 0;
              for (int c : S.cofacets_of(0, *S.index_of(Simplex{1}))) s += S.weight(1, c);
              return s;
          }());
    CHECK_THROWS_AS(X.skeleton(4, WeightKind::Homogeneous), BadDimension);
}

TEST_CASE("build rejections") {
    CHECK_THROWS_AS(WeightedComplex::build({}, WeightKind::Homogeneous), BadArgs);
    CHECK_THROWS_AS(
        WeightedComplex::build({Simplex{0, 1}, Simplex{2, 3, 4}}, WeightKind::Homogeneous),
        MixedDimension);
    CHECK_THROWS_AS(
        WeightedComplex::build({Simplex{0, 1}, Simplex{0, 1}}, WeightKind::Homogeneous),
        DuplicateTopSimplex);
    CHECK_THROWS_AS(WeightedComplex::build({Simplex{0, 1}}, WeightKind::Custom, {Rational(0)}),
                    NonPositiveWeight);
    CHECK_THROWS_AS(WeightedComplex::build({Simplex{0, 1}}, WeightKind::Custom, {}), BadArgs);
    CHECK_THROWS_AS(Simplex({0, 0, 1}), BadArgs);
}

TEST_CASE("validate_parts flags corruption") {
    const auto X = corpus_complex("glued-tetrahedra");
    std::vector<std::vector<Simplex>> cells;
    std::vector<std::vector<Rational>> weights;
    for (int k = -1; k <= X.dimension(); ++k) {
        cells.push_back(X.cells(k));
        weights.push_back(X.weights(k));
    }
    REQUIRE_NOTHROW(WeightedComplex::validate_parts(X.dimension(), cells, weights));
    auto bad = weights;
    bad[2][0] += Rational(1, 7);
    CHECK_THROWS_AS(WeightedComplex::validate_parts(X.dimension(), cells, bad), ValidationError);
}

TEST_CASE("hash is stable and weight-sensitive") {
    const auto A = WeightedComplex::build({Simplex{0, 1, 2}}, WeightKind::Homogeneous);
    const auto B = WeightedComplex::build({Simplex{0, 1, 2}}, WeightKind::Homogeneous);
    const auto C = WeightedComplex::build({Simplex{0, 1, 2}}, WeightKind::Custom, {Rational(2)});
    CHECK(A.hash() == B.hash());
    CHECK(A.hash() != C.hash());
    CHECK(complex_hash_hex(A).size() == 16);
}

TEST_CASE("graph construction from skeleton") {
    const auto G = WeightedGraph::from_complex_skeleton(corpus_complex("triangle-full"));
    REQUIRE(G.order() == 3);
    REQUIRE(G.edges.size() == 3);
    for (const auto& w : G.edge_weight) CHECK(w == 1);
    for (const auto& w : G.vertex_weight) CHECK(w == 2);
    CHECK(G.connected());
    CHECK(WeightedGraph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {2, 3}},
                                        {Rational(1), Rational(1)})
              .component_count() == 2);
}

TEST_CASE("spectral gap fixtures") {
    auto gap = [](const char* name) {
        return spectral_gap(WeightedGraph::from_complex_skeleton(corpus_complex(name)));
    };
    CHECK(std::fabs(gap("hollow-triangle") - 1.5) < kTol);
    CHECK(std::fabs(gap("k4-graph") - 4.0 / 3.0) < kTol);
    CHECK(std::fabs(gap("fano-flag") - (1.0 - std::sqrt(2.0) / 3.0)) < kTol);
    CHECK(std::fabs(gap("petersen") - 2.0 / 3.0) < kTol);
    CHECK(std::fabs(gap("edge") - 2.0) < kTol);
    // C4 and the 5-star both have normalized-Laplacian gap exactly 1
    CHECK(std::fabs(spectral_gap(WeightedGraph::from_complex_skeleton(
                        detail::cycle_graph(4))) - 1.0) < kTol);
    CHECK(std::fabs(gap("star-5") - 1.0) < kTol);
}

TEST_CASE("laplacian spectrum is sorted and starts at zero") {
    const auto G = WeightedGraph::from_complex_skeleton(corpus_complex("petersen"));
    const auto spec = laplacian_spectrum(G);
    REQUIRE(spec.size() == 10);
    CHECK(std::fabs(spec.front()) < kTol);
    for (std::size_t i = 1; i < spec.size(); ++i) CHECK(spec[i - 1] <= spec[i] + kTol);
    CHECK(std::fabs(spec.back() - 5.0 / 3.0) < kTol);
}

TEST_CASE("cheeger bounds on K3 equality case") {
    const auto G = WeightedGraph::from_complex_skeleton(corpus_complex("hollow-triangle"));
    const auto rec = cheeger_check(G, {0}, kTol);
    CHECK(rec.cut == 2);
    CHECK(rec.inner == 0);
    CHECK(rec.weight_u == 2);
    CHECK(rec.weight_rest == 4);
    CHECK(std::fabs(rec.lambda - 1.5) < kTol);
    CHECK(std::fabs(rec.bound_cut_rhs - 2.0) < kTol);
    CHECK(rec.cut_ok);
    CHECK(rec.inner_ok);
}

TEST_CASE("cheeger holds on all petersen subsets of size <= 3") {
    const auto G = WeightedGraph::from_complex_skeleton(corpus_complex("petersen"));
    for (int a = 0; a < 10; ++a)
        for (int b = a; b < 10; ++b)
            for (int c = b; c < 10; ++c) {
                std::vector<int> u{a};
                if (b != a) u.push_back(b);
                if (c != b && c != a) u.push_back(c);
                const auto rec = cheeger_check(G, u, kTol);
                CHECK(rec.cut_ok);
                CHECK(rec.inner_ok);
            }
    CHECK_THROWS_AS(cheeger_check(G, {}, kTol), EmptyOrFullSubset);
    CHECK_THROWS_AS(cheeger_check(G, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, kTol), EmptyOrFullSubset);
}

TEST_CASE("tetrahedron spectral profile and descent") {
    const auto P = spectral_profile(corpus_complex("tetrahedron"));
    REQUIRE(P.n == 3);
    REQUIRE(P.lambda.size() == 3);
    CHECK(std::fabs(P.lambda[0] - 4.0 / 3.0) < kTol);
    CHECK(std::fabs(P.lambda[1] - 1.5) < kTol);
    CHECK(std::fabs(P.lambda[2] - 2.0) < kTol);
    CHECK(std::fabs(P.lambda[0] - (2.0 - 1.0 / P.lambda[1])) < kTol);
    CHECK(std::fabs(P.lambda[1] - (2.0 - 1.0 / P.lambda[2])) < kTol);
    const auto D = descent_check(P, kTol);
    CHECK(D.all_ok);
    CHECK(D.part2_applicable);
}

TEST_CASE("link gaps and local expansion") {
    const auto& S3 = corpus_complex("sphere-3d");
    CHECK(std::fabs(link_gap(S3, Simplex{0, 1}) - 1.5) < kTol);
    CHECK(std::fabs(local_spectral_expansion(S3) - 1.5) < kTol);
    CHECK(std::fabs(local_spectral_expansion(corpus_complex("tetrahedron")) - 2.0) < kTol);
    const auto wedge = WeightedComplex::build({Simplex{0, 1, 2}, Simplex{0, 3, 4}},
                                              WeightKind::Homogeneous);
    CHECK_THROWS_AS(local_spectral_expansion(wedge), DisconnectedLink);
}

TEST_CASE("corpus shape contract") {
    const auto& c = corpus();
    REQUIRE(c.size() >= 50);
    bool dims[5] = {false, false, false, false, false};
    for (const auto& e : c) {
        INFO(e.name);
        REQUIRE(e.X.dimension() >= 1);
        REQUIRE(e.X.dimension() <= 4);
        dims[e.X.dimension()] = true;
        REQUIRE(e.X.count(e.X.dimension()) <= 200);
        REQUIRE(e.X.count(0) <= 14);
        for (const auto& other : c)
            if (&other != &e) REQUIRE(other.name != e.name);
    }
    CHECK(dims[1]);
    CHECK(dims[2]);
    CHECK(dims[3]);
    CHECK(dims[4]);
}
