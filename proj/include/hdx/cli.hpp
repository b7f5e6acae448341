#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdx/cli_support.hpp"

namespace hdx {

inline int run_cli(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"hdx: spectral, cohomological, and isoperimetric analysis of weighted "
                 "simplicial complexes"};
    app.require_subcommand(1);

    std::string eps_s, override_c_s, input_eps_s, target_s, epsilon_s, k_s;

    auto add_common = [&](CLI::App* sub, bool with_enum) {
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        if (with_enum) {
            sub->add_option("--cap", cfg.cap,
                            "enumeration budget in states (default 2^26)");
            sub->add_option("--threads", cfg.threads, "worker cap (default 1)");
        }
        sub->add_option("--tol", cfg.tol, "float comparison tolerance (default 1e-9)");
    };

    auto* validate = app.add_subcommand("validate", "parse a complex and re-check weight laws");
    validate->add_option("complex", cfg.input, "complex JSON file")->required();
    add_common(validate, false);

    auto* weights = app.add_subcommand("weights", "per-level totals and cell weights");
    weights->add_option("complex", cfg.input, "complex JSON file")->required();
    weights->add_option("--k", k_s, "restrict the per-cell table to this dimension");
    add_common(weights, false);

    auto* spectral = app.add_subcommand("spectral", "link-gap profile and descent check");
    spectral->add_option("complex", cfg.input, "complex JSON file")->required();
    add_common(spectral, false);

    auto* expansion = app.add_subcommand(
        "expansion", "coboundary/cocycle expansion, cofilling, systole");
    expansion->add_option("complex", cfg.input, "complex JSON file")->required();
    expansion->add_option("--k", k_s, "single dimension (default: all of -1..n-1)");
    expansion->add_option("--mode", cfg.mode, "exhaustive | quotient (default quotient)");
    add_common(expansion, true);

    auto* minimize = app.add_subcommand("minimize", "run the eps-local-minimization procedure");
    minimize->add_option("complex", cfg.input, "complex JSON file")->required();
    minimize->add_option("--eps", eps_s, "positive rational p/q")->required();
    minimize->add_option("--input", cfg.cochain, "cochain JSON file ({\"k\":int,\"hex\":str})")
        ->required();
    add_common(minimize, true);

    auto* scan = app.add_subcommand(
        "scan", "isoperimetric scan over the eps-locally-minimal hypothesis set");
    scan->add_option("complex", cfg.input, "complex JSON file")->required();
    scan->add_option("--k", k_s, "scan dimension: 0, 1 or 2")->required();
    scan->add_option("--eps", eps_s, "override the local-minimality eps (rational)");
    scan->add_option("--override-C", override_c_s, "override the norm-bound coefficient C_k");
    scan->add_option("--input-eps", input_eps_s, "k=2 chain input parameter (rational)");
    scan->add_option("--target", target_s, "override the target ratio (rational)");
    scan->add_option("--samples", cfg.samples,
                     "sample count when 2^#cells exceeds --cap (default 4096)");
    scan->add_option("--seed", cfg.seed, "sampling seed (default 0xC0FFEE)");
    scan->add_flag("--enforce-spectral", cfg.enforce_spectral,
                   "fail instead of reporting when the spectral hypothesis is not met");
    add_common(scan, true);

    auto* certify = app.add_subcommand("certify", "overlap-hypothesis certificate");
    certify->add_option("complex", cfg.input, "complex JSON file")->required();
    certify->add_option("--l", cfg.l, "skeleton level (only 2 is supported; default 2)");
    certify->add_option("--epsilon", epsilon_s,
                        "assert this link expansion floor instead of the measured one");
    add_common(certify, true);

    auto* suite = app.add_subcommand("lemma-suite", "identity suite over the built-in corpus");
    suite->add_option("--seed", cfg.seed, "sample seed (default 0xC0FFEE)");
    suite->add_option("--f2-samples", cfg.f2_samples,
                      "random cochains per (complex, k) (default 8)");
    suite->add_option("--minimize-samples", cfg.minimize_samples,
                      "minimizer runs per eligible (complex, k) (default 3)");
    add_common(suite, false);

    auto* gen = app.add_subcommand("gen", "generate a complex file");
    gen->add_option("--kind", cfg.kind,
                    "full-simplex | hollow-simplex | pg-flag | linial-meshulam | skeleton | join")
        ->required();
    gen->add_option("--v", cfg.v, "vertex count (full/hollow simplex, LM; default 4)");
    gen->add_option("--n", cfg.n, "dimension for linial-meshulam (default 2)");
    gen->add_option("--q", cfg.q, "field size for pg-flag: 2 or 3 (default 2)");
    gen->add_option("--l", cfg.l, "skeleton level (default 2)");
    gen->add_option("--p", cfg.p, "LM keep probability, rational in (0,1] (default 1/2)");
    gen->add_option("--seed", cfg.seed, "LM seed (default 0xC0FFEE)");
    gen->add_option("--in", cfg.input, "input complex (skeleton, join)");
    gen->add_option("--in2", cfg.input2, "second input complex (join)");
    gen->add_flag("--normalized", cfg.normalized,
                  "use normalized-homogeneous weights for skeleton output");
    add_common(gen, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!k_s.empty()) cfg.k = std::stoi(k_s);
        if (!eps_s.empty()) cfg.eps = eps_s;
        if (!override_c_s.empty()) cfg.override_C = override_c_s;
        if (!input_eps_s.empty()) cfg.input_eps = input_eps_s;
        if (!target_s.empty()) cfg.target = target_s;
        if (!epsilon_s.empty()) cfg.epsilon = epsilon_s;
    } catch (const std::exception&) {
        std::cerr << "error: bad integer argument\n";
        return 1;
    }
    return run(cfg);
}

}  // namespace hdx
