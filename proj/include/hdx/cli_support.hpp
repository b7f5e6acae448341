#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hdx/corpus.hpp"
#include "hdx/io.hpp"
#include "hdx/lemma_suite.hpp"

namespace hdx {

/// One config struct for all nine commands; every knob has a default and the
/// whole thing round-trips through JSON (echoed verbatim into each report).
struct RunConfig {
    std::string command;
    std::string input;    // complex file (or gen --in)
    std::string input2;   // gen join --in2
    std::string out;      // report / generated-complex destination ("" = stdout)
    std::string cochain;  // minimize --input
    std::string mode = "quotient";
    std::string kind;      // gen --kind
    std::string p = "1/2"; // gen linial-meshulam keep probability

    std::optional<int> k;
    int l = 2;
    int q = 2;
    int v = 4;
    int n = 2;

    std::optional<std::string> eps;         // rational strings
    std::optional<std::string> override_C;
    std::optional<std::string> input_eps;
    std::optional<std::string> target;
    std::optional<std::string> epsilon;

    bool normalized = false;
    bool enforce_spectral = false;
    std::uint64_t seed = 0xC0FFEEull;
    std::uint64_t samples = 4096;
    std::uint64_t cap = std::uint64_t(1) << 26;
    int threads = 1;
    double tol = 1e-9;
    int f2_samples = 8;
    int minimize_samples = 3;
};

inline Json run_config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["input"] = c.input;
    j["input2"] = c.input2;
    j["out"] = c.out;
    j["cochain"] = c.cochain;
    j["mode"] = c.mode;
    j["kind"] = c.kind;
    j["p"] = c.p;
    if (c.k) j["k"] = *c.k;
    j["l"] = c.l;
    j["q"] = c.q;
    j["v"] = c.v;
    j["n"] = c.n;
    if (c.eps) j["eps"] = *c.eps;
    if (c.override_C) j["override_C"] = *c.override_C;
    if (c.input_eps) j["input_eps"] = *c.input_eps;
    if (c.target) j["target"] = *c.target;
    if (c.epsilon) j["epsilon"] = *c.epsilon;
    j["normalized"] = c.normalized;
    j["enforce_spectral"] = c.enforce_spectral;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["cap"] = c.cap;
    j["threads"] = c.threads;
    j["tol"] = format_float(c.tol);
    j["f2_samples"] = c.f2_samples;
    j["minimize_samples"] = c.minimize_samples;
    return j;
}

inline RunConfig run_config_from_json(const Json& j) {
    RunConfig c;
    auto str = [&](const char* key, std::string& into) {
        if (j.contains(key)) into = j[key].get<std::string>();
    };
    str("command", c.command);
    str("input", c.input);
    str("input2", c.input2);
    str("out", c.out);
    str("cochain", c.cochain);
    str("mode", c.mode);
    str("kind", c.kind);
    str("p", c.p);
    if (j.contains("k")) c.k = j["k"].get<int>();
    if (j.contains("l")) c.l = j["l"].get<int>();
    if (j.contains("q")) c.q = j["q"].get<int>();
    if (j.contains("v")) c.v = j["v"].get<int>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    auto opt = [&](const char* key, std::optional<std::string>& into) {
        if (j.contains(key)) into = j[key].get<std::string>();
    };
    opt("eps", c.eps);
    opt("override_C", c.override_C);
    opt("input_eps", c.input_eps);
    opt("target", c.target);
    opt("epsilon", c.epsilon);
    if (j.contains("normalized")) c.normalized = j["normalized"].get<bool>();
    if (j.contains("enforce_spectral")) c.enforce_spectral = j["enforce_spectral"].get<bool>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) c.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("cap")) c.cap = j["cap"].get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("tol")) c.tol = std::stod(j["tol"].get<std::string>());
    if (j.contains("f2_samples")) c.f2_samples = j["f2_samples"].get<int>();
    if (j.contains("minimize_samples")) c.minimize_samples = j["minimize_samples"].get<int>();
    return c;
}

namespace detail {

inline Json envelope(const RunConfig& cfg, const std::optional<std::string>& complex_hash,
                     const char* payload_key, Json payload,
                     const char* schema = "hdx-report/1") {
    Json j;
    j["schema"] = schema;
    j["tool"] = kToolVersion;
    j["command"] = cfg.command;
    if (complex_hash) j["complex_hash"] = *complex_hash;
    j["config"] = run_config_json(cfg);
    j[payload_key] = std::move(payload);
    return j;
}

inline void emit_report(const RunConfig& cfg, const Json& report) {
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        write_text_file(cfg.out, text);
}

inline SearchMode parse_mode(const std::string& s) {
    if (s == "exhaustive") return SearchMode::Exhaustive;
    if (s == "quotient") return SearchMode::Quotient;
    throw BadArgs("--mode must be exhaustive or quotient, got '" + s + "'");
}

inline int cmd_validate(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    X.validate();
    Json pay;
    pay["dimension"] = X.dimension();
    Json counts = Json::array();
    Json totals = Json::array();
    for (int k = -1; k <= X.dimension(); ++k) {
        counts.push_back(X.count(k));
        totals.push_back(format_rational(X.total_weight(k)));
    }
    pay["counts_from_dim_minus_1"] = std::move(counts);
    pay["totals_from_dim_minus_1"] = std::move(totals);
    pay["kind"] = weight_kind_name(X.kind());
    pay["weight_law_ok"] = true;  // validate() would have thrown otherwise
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "validation", std::move(pay)));
    return 0;
}

inline int cmd_weights(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    Json pay;
    Json levels = Json::array();
    for (int k = -1; k <= X.dimension(); ++k) {
        Json row;
        row["k"] = k;
        row["count"] = X.count(k);
        row["total"] = format_rational(X.total_weight(k));
        levels.push_back(std::move(row));
    }
    pay["levels"] = std::move(levels);
    if (cfg.k) {
        const int k = *cfg.k;
        if (k < -1 || k > X.dimension()) throw BadDimension("no cells of dim " + std::to_string(k));
        Json cells = Json::array();
        for (std::size_t i = 0; i < X.count(k); ++i) {
            Json verts = Json::array();
            for (const VertexId v : X.cell(k, i).verts()) verts.push_back(v);
            cells.push_back(Json::array({std::move(verts), format_rational(X.weight(k, i))}));
        }
        pay["cells"] = std::move(cells);
    }
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "weights", std::move(pay)));
    return 0;
}

inline int cmd_spectral(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    const auto P = spectral_profile(X);
    Json pay;
    pay["profile"] = spectral_profile_json(P);
    pay["descent"] = descent_json(descent_check(P, cfg.tol));
    try {
        pay["local_expansion"] = float_json(local_spectral_expansion(X));
    } catch (const Error& e) {
        pay["local_expansion_error"] = e.what();
    }
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "spectral", std::move(pay)));
    return 0;
}

inline int cmd_expansion(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    const SearchMode mode = parse_mode(cfg.mode);
    const EnumOptions opts{cfg.cap, cfg.threads};
    Json pay;
    if (cfg.k) {
        const int k = *cfg.k;
        Json row;
        row["k"] = k;
        row["eps"] = search_outcome_json(coboundary_expansion(X, k, mode, opts));
        row["eps_tilde"] = search_outcome_json(cocycle_expansion(X, k, mode, opts));
        row["mu"] = search_outcome_json(cofilling(X, k, opts));
        row["systole"] = search_outcome_json(systole(X, k, opts));
        pay["rows"] = Json::array({std::move(row)});
    } else {
        pay = expansion_report_json(expansion_report(X, mode, opts));
    }
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "expansion", std::move(pay)));
    return 0;
}

inline int cmd_minimize(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    const Cochain phi = cochain_from_json(X, parse_json(read_text_file(cfg.cochain)));
    const Rational eps = parse_rational(*cfg.eps);
    const EnumOptions opts{cfg.cap, cfg.threads};
    const auto T = eps_local_minimize(X, phi, eps, opts);
    Json pay = minimization_trace_json(X, T);
    pay["output_is_eps_locally_minimal"] = is_eps_locally_minimal(X, T.corrected, eps, opts);
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "minimization", std::move(pay)));
    return 0;
}

inline int cmd_scan(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    if (!cfg.k) throw BadArgs("scan needs --k");
    ScanOptions base;
    base.enforce_spectral = cfg.enforce_spectral;
    base.cap = cfg.cap;
    base.samples = cfg.samples;
    base.seed = cfg.seed;
    base.threads = cfg.threads;
    base.tol = cfg.tol;
    ScanOptions over = base;
    bool has_override = false;
    if (cfg.eps) {
        over.eps = parse_rational(*cfg.eps);
        has_override = true;
    }
    if (cfg.override_C) {
        over.norm_coeff = parse_rational(*cfg.override_C);
        has_override = true;
    }
    if (cfg.input_eps) {
        over.input_eps = parse_rational(*cfg.input_eps);
        has_override = true;
    }
    if (cfg.target) {
        over.target = to_double(parse_rational(*cfg.target));
        has_override = true;
    }
    Json pay;
    const auto baseline = scan_isoperimetry(X, *cfg.k, base);
    pay["baseline"] = scan_json(X, baseline);
    bool pass = baseline.pass;
    if (has_override) {
        const auto o = scan_isoperimetry(X, *cfg.k, over);
        pay["override"] = scan_json(X, o);
        pass = o.pass;
    }
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "scan", std::move(pay)));
    return pass ? 0 : 2;
}

inline int cmd_certify(const RunConfig& cfg) {
    const auto X = load_complex(cfg.input);
    if (cfg.l != 2) throw BadDimension("only --l 2 is supported");
    std::optional<Rational> override_eps;
    if (cfg.epsilon) override_eps = parse_rational(*cfg.epsilon);
    const EnumOptions opts{cfg.cap, cfg.threads};
    const auto cert = certify_2skeleton(X, override_eps, opts, cfg.tol);
    emit_report(cfg, envelope(cfg, complex_hash_hex(X), "certificate", certificate_json(cert),
                              "hdx-cert/1"));
    return cert.verdict ? 0 : 2;
}

inline int cmd_lemma_suite(const RunConfig& cfg) {
    LemmaSuiteOptions o;
    o.seed = cfg.seed;
    o.f2_samples = cfg.f2_samples;
    o.minimize_samples = cfg.minimize_samples;
    o.tol = cfg.tol;
    const auto R = lemma_suite(o);
    Json pay;
    pay["seed"] = R.seed;
    Json rows = Json::array();
    for (const auto& c : R.checks) {
        Json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    pay["checks"] = std::move(rows);
    pay["all_pass"] = R.all_pass;
    emit_report(cfg, envelope(cfg, std::nullopt, "lemma_suite", std::move(pay)));
    return R.all_pass ? 0 : 2;
}

inline int cmd_gen(const RunConfig& cfg) {
    WeightedComplex X = [&] {
        if (cfg.kind == "full-simplex") return full_simplex(cfg.v);
        if (cfg.kind == "hollow-simplex") return hollow_simplex(cfg.v);
        if (cfg.kind == "pg-flag") return projective_plane_flag(cfg.q);
        if (cfg.kind == "linial-meshulam")
            return linial_meshulam(cfg.n, cfg.v, parse_rational(cfg.p), cfg.seed);
        if (cfg.kind == "skeleton") {
            if (cfg.input.empty()) throw BadArgs("skeleton needs --in");
            return load_complex(cfg.input).skeleton(
                cfg.l, cfg.normalized ? WeightKind::NormalizedHomogeneous
                                      : WeightKind::Homogeneous);
        }
        if (cfg.kind == "join") {
            if (cfg.input.empty() || cfg.input2.empty()) throw BadArgs("join needs --in and --in2");
            return join(load_complex(cfg.input), load_complex(cfg.input2));
        }
        throw BadArgs("unknown --kind '" + cfg.kind + "'");
    }();
    const std::string text = complex_to_json(X).dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    write_text_file(cfg.out, text);
    Json pay;
    pay["dimension"] = X.dimension();
    Json counts = Json::array();
    for (int k = -1; k <= X.dimension(); ++k) counts.push_back(X.count(k));
    pay["counts_from_dim_minus_1"] = std::move(counts);
    pay["written_to"] = cfg.out;
    std::cout << envelope(cfg, complex_hash_hex(X), "generated", std::move(pay)).dump(2) << "\n";
    return 0;
}

inline int dispatch(const RunConfig& cfg) {
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "weights") return cmd_weights(cfg);
    if (cfg.command == "spectral") return cmd_spectral(cfg);
    if (cfg.command == "expansion") return cmd_expansion(cfg);
    if (cfg.command == "minimize") return cmd_minimize(cfg);
    if (cfg.command == "scan") return cmd_scan(cfg);
    if (cfg.command == "certify") return cmd_certify(cfg);
    if (cfg.command == "lemma-suite") return cmd_lemma_suite(cfg);
    if (cfg.command == "gen") return cmd_gen(cfg);
    throw BadArgs("unknown command '" + cfg.command + "'");
}

}  // namespace detail

/// Executes one command. Exit contract: 0 = success, 2 = a hypothesis-failure
/// verdict (scan target missed, certificate verdict false, lemma-suite
/// failure; the report is still written), 1 = crash-class errors (parse,
/// validation, enumeration cap, bad arguments), reported on stderr.
inline int run(const RunConfig& cfg) {
    try {
        return detail::dispatch(cfg);
    } catch (const HypothesisNotMet& e) {
        std::cerr << "hypothesis not met: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hdx
