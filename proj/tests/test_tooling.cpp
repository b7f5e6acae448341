#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hdx/cli_support.hpp"
#include "hdx/corpus.hpp"
#include "hdx/generators.hpp"
#include "hdx/io.hpp"

using namespace hdx;
namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "hdx-tooling";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

int run_cli_line(const std::string& args) {
    const std::string cmd = std::string(HDX_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_complex_file(const std::string& path, const WeightedComplex& X) {
    write_text_file(path, complex_to_json(X).dump(2) + "\n");
}

Rational parse_frac(const std::string& s) { return parse_rational(s); }

}  // namespace

TEST_CASE("full and hollow simplex generators") {
    const auto full = full_simplex(5);
    CHECK(full.dimension() == 4);
    CHECK(full.count(0) == 5);
    CHECK(full.count(2) == 10);
    CHECK(full.count(4) == 1);
    const auto hollow = hollow_simplex(4);
    CHECK(hollow.dimension() == 2);
    CHECK(hollow.count(2) == 4);
    CHECK(hollow.count(1) == 6);
    CHECK_THROWS_AS(full_simplex(0), BadArgs);
    CHECK_THROWS_AS(hollow_simplex(1), BadArgs);
}

TEST_CASE("flag complexes of small projective planes") {
    const auto q2 = projective_plane_flag(2);
    CHECK(q2.dimension() == 1);
    CHECK(q2.count(0) == 14);
    CHECK(q2.count(1) == 21);
    // every point is on 3 lines and dually: the graph is 3-regular
    for (std::size_t v = 0; v < q2.count(0); ++v) CHECK(q2.weight(0, v) == 3);
    const auto q3 = projective_plane_flag(3);
    CHECK(q3.count(0) == 26);
    CHECK(q3.count(1) == 52);
    for (std::size_t v = 0; v < q3.count(0); ++v) CHECK(q3.weight(0, v) == 4);
    CHECK_THROWS_AS(projective_plane_flag(4), UnsupportedQ);
}

TEST_CASE("random complexes are a function of their parameters") {
    const auto A = linial_meshulam(2, 7, Rational(1, 2), 42);
    const auto B = linial_meshulam(2, 7, Rational(1, 2), 42);
    CHECK(A.hash() == B.hash());
    CHECK(A.dimension() == 2);
    const auto C = linial_meshulam(2, 7, Rational(1, 2), 43);
    CHECK(C.hash() != A.hash());  // a different draw with near certainty
    const auto all = linial_meshulam(2, 6, Rational(1), 0);
    CHECK(all.count(2) == 20);  // p = 1 keeps every candidate
    CHECK_THROWS_AS(linial_meshulam(2, 2, Rational(1, 2), 0), BadArgs);
    CHECK_THROWS_AS(linial_meshulam(2, 6, Rational(0), 0), BadArgs);
    CHECK_THROWS_AS(linial_meshulam(2, 6, Rational(3, 2), 0), BadArgs);
    CHECK_THROWS_AS(linial_meshulam(2, 6, Rational(Integer(1), Integer(1) << 40), 7),
                    EmptyTopLevel);
}

TEST_CASE("join of point sets is complete bipartite") {
    const auto pts = WeightedComplex::build({Simplex{0}, Simplex{1}, Simplex{2}},
                                            WeightKind::Homogeneous);
    const auto J = join(pts, pts);
    CHECK(J.dimension() == 1);
    CHECK(J.count(0) == 6);
    CHECK(J.count(1) == 9);
    CHECK(J.contains(Simplex{0, 3}));
    CHECK_FALSE(J.contains(Simplex{0, 1}));
}

TEST_CASE("complex json round trip") {
    for (const auto* name : {"triangle-full", "custom-glued-tetrahedra", "rp2-6"}) {
        const auto& X = corpus_complex(name);
        const Json j = complex_to_json(X);
        const auto Y = complex_from_json(j);
        CHECK(X.hash() == Y.hash());
        CHECK(X.kind() == Y.kind());
    }
    const Json j = complex_to_json(corpus_complex("custom-triangle"));
    REQUIRE(j.contains("weights"));
    const Json plain = complex_to_json(corpus_complex("triangle-full"));
    CHECK_FALSE(plain.contains("weights"));
    CHECK(plain["kind"] == "homogeneous");
}

TEST_CASE("complex json rejects malformed input") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(complex_from_json(parse_json(R"({"top_simplices": []})")), BadArgs);
    CHECK_THROWS_AS(
        complex_from_json(parse_json(R"({"top_simplices": [[0,1]], "kind": "woolly"})")),
        ParseError);
    CHECK_THROWS_AS(
        complex_from_json(parse_json(R"({"top_simplices": [[0,1]], "kind": "custom"})")),
        ParseError);
}

TEST_CASE("cochain json round trip") {
    const auto& X = corpus_complex("hollow-tetrahedron");
    Cochain phi(1, X.count(1), X.hash());
    phi.set(0, true);
    phi.set(4, true);
    const Json j = cochain_to_json(X, phi);
    CHECK(j["k"] == 1);
    CHECK(j["support"].size() == 2);
    CHECK(cochain_from_json(X, j) == phi);
    Json bad = j;
    bad["k"] = 9;
    CHECK_THROWS_AS(cochain_from_json(X, bad), ParseError);
}

TEST_CASE("number formatting is stable") {
    CHECK(format_rational(Rational(3)) == "3");
    CHECK(format_rational(Rational(-7, 2)) == "-7/2");
    CHECK(format_ext(ExtRational::inf()) == "inf");
    CHECK(format_float(0.25) == "0.25");
    CHECK(format_float(1.0 / 3.0) == "0.333333333333");
    CHECK(parse_rational("5/3") == Rational(5, 3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS_AS(parse_rational("5/"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
}

TEST_CASE("run config json round trip") {
    RunConfig cfg;
    cfg.command = "scan";
    cfg.input = "X.json";
    cfg.k = 1;
    cfg.eps = "1/16";
    cfg.override_C = "1/4";
    cfg.target = "1/4";
    cfg.seed = 7;
    cfg.samples = 128;
    cfg.threads = 4;
    const RunConfig back = run_config_from_json(run_config_json(cfg));
    CHECK(back.command == cfg.command);
    CHECK(back.input == cfg.input);
    CHECK(back.k == cfg.k);
    CHECK(back.eps == cfg.eps);
    CHECK(back.override_C == cfg.override_C);
    CHECK(back.target == cfg.target);
    CHECK(back.seed == cfg.seed);
    CHECK(back.samples == cfg.samples);
    CHECK(back.threads == cfg.threads);
    CHECK(back.mode == cfg.mode);
}

TEST_CASE("cli generates, validates and reports") {
    const std::string fano = path_of("fano.json");
    const std::string report = path_of("validate.json");
    REQUIRE(run_cli_line("gen --kind pg-flag --q 2 --out " + fano) == 0);
    REQUIRE(run_cli_line("validate " + fano + " --out " + report) == 0);
    const Json j = parse_json(slurp(report));
    CHECK(j["schema"] == "hdx-report/1");
    CHECK(j["tool"] == kToolVersion);
    CHECK(j["command"] == "validate");
    CHECK(j["complex_hash"].get<std::string>().size() == 16);
    CHECK(j["config"]["input"] == fano);
    CHECK(j["validation"]["weight_law_ok"] == true);
    CHECK(j["validation"]["kind"] == "homogeneous");
    CHECK(j["validation"]["counts_from_dim_minus_1"][0] == 1);
    CHECK(j["validation"]["counts_from_dim_minus_1"][1] == 14);
}

TEST_CASE("cli expansion meets the flag complex bound") {
    const std::string fano = path_of("fano2.json");
    const std::string report = path_of("expansion.json");
    REQUIRE(run_cli_line("gen --kind pg-flag --q 2 --out " + fano) == 0);
    REQUIRE(run_cli_line("expansion " + fano + " --k 0 --out " + report) == 0);
    const Json j = parse_json(slurp(report));
    const auto& row = j["expansion"]["rows"][0];
    CHECK(row["k"] == 0);
    CHECK(parse_frac(row["eps"]["value"].get<std::string>()) >= Rational(1, 6));
    CHECK(row["eps"]["mode"] == "quotient");
    CHECK(row["systole"]["value"] == "inf");
}

TEST_CASE("cli certify writes the certificate and signals the verdict") {
    const std::string in = path_of("glued.json");
    const std::string cert = path_of("cert.json");
    write_complex_file(in, corpus_complex("glued-tetrahedra"));
    CHECK(run_cli_line("certify " + in + " --out " + cert) == 2);
    const Json j = parse_json(slurp(cert));
    CHECK(j["schema"] == "hdx-cert/1");
    CHECK(j["certificate"]["verdict"] == false);
    CHECK(j["certificate"]["spectral_ok"] == false);
    CHECK(j["certificate"]["lambda_local"] == "1");
    // unsupported skeleton level is a usage error, not a verdict
    CHECK(run_cli_line("certify " + in + " --l 1 --out " + cert) == 1);
}

TEST_CASE("cli scan with override constants") {
    const std::string in = path_of("hollow-tet.json");
    const std::string report = path_of("scan.json");
    write_complex_file(in, corpus_complex("hollow-tetrahedron"));
    REQUIRE(run_cli_line("scan " + in + " --k 1 --override-C 1/4 --target 1/4 --out " +
                         report) == 0);
    const Json j = parse_json(slurp(report));
    REQUIRE(j["scan"].contains("baseline"));
    REQUIRE(j["scan"].contains("override"));
    CHECK(j["scan"]["baseline"]["vacuous"] == true);
    CHECK(j["scan"]["override"]["in_hypothesis"] == 6);
    CHECK(j["scan"]["override"]["pass"] == true);
    // the stated-constants run alone passes vacuously
    REQUIRE(run_cli_line("scan " + in + " --k 1 --out " + report) == 0);
    CHECK_FALSE(parse_json(slurp(report))["scan"].contains("override"));
}

TEST_CASE("cli minimize round trips a cochain") {
    const std::string in = path_of("triangle.json");
    const std::string coch = path_of("phi.json");
    const std::string report = path_of("minimize.json");
    const auto& X = corpus_complex("triangle-full");
    write_complex_file(in, X);
    Cochain phi(0, X.count(0), X.hash());
    phi.set(0, true);
    phi.set(1, true);
    write_text_file(coch, cochain_to_json(X, phi).dump(2) + "\n");
    REQUIRE(run_cli_line("minimize " + in + " --eps 1/4 --input " + coch + " --out " +
                         report) == 0);
    const Json j = parse_json(slurp(report));
    CHECK(j["minimization"]["input_norm"] == "4");
    CHECK(j["minimization"]["corrected_norm"] == "2");
    CHECK(j["minimization"]["step_count"] == 1);
    CHECK(j["minimization"]["output_is_eps_locally_minimal"] == true);
    const Cochain corrected =
        cochain_from_json(X, j["minimization"]["corrected"]);
    CHECK(norm(X, corrected) == 2);
}

TEST_CASE("cli crash-class failures exit 1") {
    const std::string bad = path_of("bad.json");
    write_text_file(bad, "{ not json\n");
    CHECK(run_cli_line("validate " + bad) == 1);
    CHECK(run_cli_line("gen --kind woolly --out " + path_of("x.json")) == 1);
    CHECK(run_cli_line("expansion " + path_of("missing-file.json")) == 1);
}

TEST_CASE("cli reports are byte deterministic") {
    const std::string in = path_of("sphere.json");
    write_complex_file(in, corpus_complex("sphere-3d"));
    // identical command lines, so the config echo matches byte for byte too
    const std::string a = path_of("spec.json");
    REQUIRE(run_cli_line("spectral " + in + " --out " + a) == 0);
    const std::string first = slurp(a);
    REQUIRE(run_cli_line("spectral " + in + " --out " + a) == 0);
    CHECK(first == slurp(a));

    const std::string c1 = path_of("cert-t1.json"), c4 = path_of("cert-t4.json");
    const int e1 = run_cli_line("certify " + in + " --threads 1 --out " + c1);
    const int e4 = run_cli_line("certify " + in + " --threads 4 --out " + c4);
    CHECK(e1 == e4);
    const std::string body1 = slurp(c1), body4 = slurp(c4);
    // the thread knob is echoed in the config; the certificate itself matches
    CHECK(parse_json(body1)["certificate"] == parse_json(body4)["certificate"]);
}

TEST_CASE("cli lemma suite passes and is reproducible") {
    const std::string a = path_of("suite.json");
    REQUIRE(run_cli_line("lemma-suite --f2-samples 2 --minimize-samples 1 --out " + a) == 0);
    const std::string first = slurp(a);
    REQUIRE(run_cli_line("lemma-suite --f2-samples 2 --minimize-samples 1 --out " + a) == 0);
    CHECK(first == slurp(a));
    const Json j = parse_json(first);
    CHECK(j["lemma_suite"]["all_pass"] == true);
    for (const auto& row : j["lemma_suite"]["checks"]) {
        INFO(row["name"].get<std::string>());
        CHECK(row["pass"] == true);
    }
}
