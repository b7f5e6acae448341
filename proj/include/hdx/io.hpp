#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/graph.hpp"
#include "hdx/isoperimetry.hpp"
#include "hdx/minimality.hpp"
#include "hdx/overlap.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "hdx 0.1.0";

/// Floats cross the JSON boundary as strings with 12 significant digits,
/// for byte-deterministic reports. Rationals are always "p/q" strings.
inline std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
}

inline Json ext_json(const ExtRational& e) { return Json(format_ext(e)); }
inline Json rat_json(const Rational& r) { return Json(format_rational(r)); }
inline Json float_json(double x) { return Json(format_float(x)); }

// ---------------------------------------------------------------- complexes

inline Json complex_to_json(const WeightedComplex& X) {
    Json j;
    Json tops = Json::array();
    for (const auto& s : X.cells(X.dimension())) {
        Json cell = Json::array();
        for (const VertexId v : s.verts()) cell.push_back(v);
        tops.push_back(std::move(cell));
    }
    j["top_simplices"] = std::move(tops);
    j["kind"] = weight_kind_name(X.kind());
    if (X.kind() == WeightKind::Custom) {
        Json w = Json::array();
        for (const auto& r : X.weights(X.dimension())) w.push_back(format_rational(r));
        j["weights"] = std::move(w);
    }
    return j;
}

inline WeightedComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("top_simplices") || !j["top_simplices"].is_array())
        throw ParseError("complex JSON needs a top_simplices array");
    std::vector<Simplex> tops;
    for (const auto& cell : j["top_simplices"]) {
        if (!cell.is_array()) throw ParseError("top_simplices entries must be arrays");
        std::vector<VertexId> verts;
        for (const auto& v : cell) {
            if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
            verts.push_back(v.get<VertexId>());
        }
        tops.emplace_back(std::move(verts));
    }
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) throw ParseError("weights must be an array");
        std::vector<Rational> w;
        for (const auto& s : j["weights"]) {
            if (!s.is_string()) throw ParseError("weights must be rational strings");
            w.push_back(parse_rational(s.get<std::string>()));
        }
        return WeightedComplex::build(std::move(tops), WeightKind::Custom, std::move(w));
    }
    WeightKind kind = WeightKind::Homogeneous;
    if (j.contains("kind")) {
        const std::string name = j["kind"].get<std::string>();
        if (name == weight_kind_name(WeightKind::Homogeneous)) kind = WeightKind::Homogeneous;
        else if (name == weight_kind_name(WeightKind::NormalizedHomogeneous))
            kind = WeightKind::NormalizedHomogeneous;
        else if (name == weight_kind_name(WeightKind::Custom))
            throw ParseError("custom kind requires a weights array");
        else throw ParseError("unknown weight kind '" + name + "'");
    }
    return WeightedComplex::build(std::move(tops), kind);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

inline WeightedComplex load_complex(const std::string& path) {
    return complex_from_json(parse_json(read_text_file(path)));
}

// ----------------------------------------------------------------- cochains

inline Json cochain_to_json(const WeightedComplex& X, const Cochain& phi) {
    Json j;
    j["k"] = phi.k();
    j["hex"] = phi.hex();
    Json supp = Json::array();
    phi.for_each_set([&](std::size_t i) {
        Json cell = Json::array();
        for (const VertexId v : X.cell(phi.k(), i).verts()) cell.push_back(v);
        supp.push_back(std::move(cell));
    });
    j["support"] = std::move(supp);
    return j;
}

inline Cochain cochain_from_json(const WeightedComplex& X, const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("hex"))
        throw ParseError("cochain JSON needs k and hex");
    const int k = j["k"].get<int>();
    if (k < -1 || k > X.dimension()) throw ParseError("cochain dimension out of range");
    return Cochain::from_hex(k, X.count(k), X.hash(), j["hex"].get<std::string>());
}

// ------------------------------------------------------------------ reports

inline Json graph_json(const WeightedGraph& G) {
    Json j;
    j["vertices"] = G.vertices;
    Json edges = Json::array();
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        Json row = Json::array();
        row.push_back(G.vertices[static_cast<std::size_t>(G.edges[e].first)]);
        row.push_back(G.vertices[static_cast<std::size_t>(G.edges[e].second)]);
        row.push_back(format_rational(G.edge_weight[e]));
        edges.push_back(std::move(row));
    }
    j["edges"] = std::move(edges);
    return j;
}

inline Json cheeger_json(const CheegerRecord& r) {
    Json j;
    j["cut"] = rat_json(r.cut);
    j["inner"] = rat_json(r.inner);
    j["weight_u"] = rat_json(r.weight_u);
    j["weight_rest"] = rat_json(r.weight_rest);
    j["lambda"] = float_json(r.lambda);
    j["bound_cut_rhs"] = float_json(r.bound_cut_rhs);
    j["bound_inner_lhs"] = float_json(r.bound_inner_lhs);
    j["cut_ok"] = r.cut_ok;
    j["inner_ok"] = r.inner_ok;
    return j;
}

inline Json spectral_profile_json(const SpectralProfile& P) {
    Json j;
    j["n"] = P.n;
    Json lam = Json::array();
    for (const double x : P.lambda) lam.push_back(format_float(x));
    j["lambda"] = std::move(lam);
    j["links_checked"] = P.links_checked;
    return j;
}

inline Json descent_json(const DescentReport& R) {
    Json j;
    j["part1"] = R.part1;
    j["part2_applicable"] = R.part2_applicable;
    j["part2"] = R.part2;
    j["all_ok"] = R.all_ok;
    return j;
}

inline const char* search_mode_name(SearchMode m) {
    return m == SearchMode::Exhaustive ? "exhaustive" : "quotient";
}

inline Json search_outcome_json(const SearchOutcome& s) {
    Json j;
    j["value"] = ext_json(s.value);
    if (s.witness) j["witness"] = s.witness->hex();
    if (s.witness_aux) j["witness_aux"] = s.witness_aux->hex();
    j["searched"] = s.searched;
    j["mode"] = search_mode_name(s.mode);
    return j;
}

inline Json expansion_report_json(const ExpansionReport& R) {
    Json rows = Json::array();
    for (const auto& row : R.rows) {
        Json j;
        j["k"] = row.k;
        j["eps"] = search_outcome_json(row.eps);
        j["eps_tilde"] = search_outcome_json(row.eps_tilde);
        j["mu"] = search_outcome_json(row.mu);
        j["systole"] = search_outcome_json(row.sys);
        rows.push_back(std::move(j));
    }
    return Json{{"rows", std::move(rows)}};
}

inline Json minimization_trace_json(const WeightedComplex& X, const MinimizationTrace& T) {
    Json j;
    j["eps"] = rat_json(T.eps);
    j["input"] = cochain_to_json(X, T.input);
    j["psi"] = T.psi.hex();
    j["corrected"] = cochain_to_json(X, T.corrected);
    j["input_norm"] = rat_json(norm(X, T.input));
    j["corrected_norm"] = rat_json(norm(X, T.corrected));
    Json steps = Json::array();
    for (const auto& s : T.steps) {
        Json row;
        row["j"] = s.j;
        row["tau"] = s.tau.str();
        row["link_correction"] = s.link_correction.hex();
        steps.push_back(std::move(row));
    }
    j["steps"] = std::move(steps);
    j["step_count"] = T.steps.size();
    return j;
}

inline Json ledger_json(const ConstantsLedger& L) {
    Json j;
    if (L.input_eps) j["input_eps"] = rat_json(*L.input_eps);
    j["delta"] = rat_json(L.delta);
    j["eps1"] = rat_json(L.eps1);
    j["c1_prime"] = rat_json(L.c1_prime);
    j["theta1_prime"] = rat_json(L.theta1_prime);
    if (L.eps) j["eps"] = rat_json(*L.eps);
    if (L.c1) j["c1"] = rat_json(*L.c1);
    if (L.theta1) j["theta1"] = rat_json(*L.theta1);
    if (L.eps2) j["eps2"] = rat_json(*L.eps2);
    if (L.c2_prime) j["c2_prime"] = rat_json(*L.c2_prime);
    if (L.theta2_prime) j["theta2_prime"] = rat_json(*L.theta2_prime);
    if (L.c2) j["c2"] = rat_json(*L.c2);
    if (L.theta2) j["theta2"] = rat_json(*L.theta2);
    Json notes = Json::array();
    for (const auto& [name, origin] : L.notes) notes.push_back(Json::array({name, origin}));
    j["notes"] = std::move(notes);
    return j;
}

inline Json thin_laplacian_json(const ThinLaplacianRecord& r) {
    Json j;
    j["k"] = r.k;
    j["trivial"] = r.trivial;
    j["lhs"] = rat_json(r.lhs);
    j["lambda"] = float_json(r.lambda);
    j["coeff"] = float_json(r.coeff);
    j["rhs"] = float_json(r.rhs);
    j["pass"] = r.pass;
    return j;
}

inline Json thinness_json(const ThinnessReport& t) {
    Json j;
    j["delta"] = rat_json(t.delta);
    j["thin_set"] = t.thin_set;
    j["thin_norm_sum"] = rat_json(t.thin_norm_sum);
    j["r_star"] = rat_json(t.r_star);
    return j;
}

inline Json scan_json(const WeightedComplex& X, const IsoperimetryScan& s) {
    Json j;
    j["k"] = s.k;
    if (s.ledger) j["ledger"] = ledger_json(*s.ledger);
    j["eps_used"] = rat_json(s.eps_used);
    if (s.norm_coeff_used) j["norm_coeff"] = rat_json(*s.norm_coeff_used);
    if (s.norm_bound) j["norm_bound"] = rat_json(*s.norm_bound);
    j["target"] = float_json(s.target);
    j["spectral_value"] = float_json(s.spectral_value);
    if (s.spectral_threshold) j["spectral_threshold"] = float_json(*s.spectral_threshold);
    j["spectral_ok"] = s.spectral_ok;
    j["exhaustive"] = s.exhaustive;
    j["enumerated"] = s.enumerated;
    j["in_hypothesis"] = s.in_hypothesis;
    if (s.worst) {
        Json w;
        w["phi"] = cochain_to_json(X, s.worst->phi);
        w["phi_norm"] = rat_json(s.worst->phi_norm);
        w["dphi_norm"] = rat_json(s.worst->dphi_norm);
        j["worst"] = std::move(w);
    }
    if (s.worst_ratio) j["worst_ratio"] = float_json(*s.worst_ratio);
    j["vacuous"] = s.vacuous;
    j["pass"] = s.pass;
    j["seed"] = s.seed;
    j["cap"] = s.cap;
    return j;
}

inline Json k2alt_json(const K2AltRecord& r) {
    Json j;
    j["branch"] = k2alt_branch_name(r.branch);
    j["trivial"] = r.trivial;
    j["spectral_value"] = float_json(r.spectral_value);
    j["spectral_threshold"] = float_json(r.spectral_threshold);
    j["spectral_ok"] = r.spectral_ok;
    j["s2"] = r.s2;
    j["s2_norm_sum"] = rat_json(r.s2_norm_sum);
    j["s2_norm_floor"] = rat_json(r.s2_norm_floor);
    j["s2_sum_ok"] = r.s2_sum_ok;
    j["dphi_norm"] = rat_json(r.dphi_norm);
    j["s2_link_diff_sum"] = rat_json(r.s2_link_diff_sum);
    j["s2_diff_rhs"] = rat_json(r.s2_diff_rhs);
    j["s2_diff_ok"] = r.s2_diff_ok;
    j["thin_r_required"] = rat_json(r.thin_r_required);
    if (r.thin) j["thin"] = thinness_json(*r.thin);
    j["thin_ok"] = r.thin_ok;
    return j;
}

inline Json kkl_json(const KKLCheck& c) {
    Json j;
    j["mu"] = rat_json(c.mu);
    j["nu"] = rat_json(c.nu);
    Json levels = Json::array();
    for (const auto& lv : c.levels) {
        Json row;
        row["k"] = lv.k;
        row["mu_k"] = ext_json(lv.mu_k);
        row["mu_ok"] = lv.mu_ok;
        row["systole_k"] = ext_json(lv.systole_k);
        row["systole_floor"] = rat_json(lv.systole_floor);
        row["systole_ok"] = lv.systole_ok;
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    j["all_ok"] = c.all_ok;
    return j;
}

inline Json skeleton_compare_json(const SkeletonCompare& s) {
    Json j;
    j["l"] = s.l;
    j["m1"] = s.m1;
    j["m2"] = s.m2;
    j["ratio"] = rat_json(s.ratio);
    j["factor"] = rat_json(s.factor);
    j["lower_factor"] = rat_json(s.lower_factor);
    j["upper_factor"] = rat_json(s.upper_factor);
    j["bounds_ok"] = s.bounds_ok;
    return j;
}

inline Json certificate_json(const OverlapCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["lambda_local"] = float_json(c.lambda_local);
    j["lambda_threshold"] = float_json(c.lambda_threshold);
    j["spectral_ok"] = c.spectral_ok;
    Json links = Json::array();
    for (const auto& e : c.link_eps1) links.push_back(format_ext(e));
    j["link_eps1"] = std::move(links);
    j["link_floor"] = ext_json(c.link_floor);
    j["epsilon_used"] = rat_json(c.epsilon_used);
    j["epsilon_overridden"] = c.epsilon_overridden;
    j["links_ok"] = c.links_ok;
    j["skeleton"] = skeleton_compare_json(c.skeleton);
    j["eps_min"] = rat_json(c.eps_min);
    Json cs = Json::array();
    for (const auto& r : c.C) cs.push_back(format_rational(r));
    j["C"] = std::move(cs);
    j["mu"] = rat_json(c.mu);
    j["nu"] = rat_json(c.nu);
    j["mu_prime"] = rat_json(c.mu_prime);
    j["nu_prime"] = rat_json(c.nu_prime);
    j["kkl"] = kkl_json(c.kkl);
    j["verdict"] = c.verdict;
    return j;
}

}  // namespace hdx
