#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/minimality.hpp"
#include "hdx/parallel.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Exact constant chain behind the dimension-specific isoperimetric bounds.
/// Fields that a given chain does not define stay disengaged; every value
/// present is a closed-form rational in the chain inputs, and `notes` records
/// the defining formula for each one.
///
/// The k=1 chain fixes (delta, eps, eps1) outright; the k=2 chain derives
/// everything from the single input `input_eps`.
struct ConstantsLedger {
    std::optional<Rational> input_eps;  // k=2 chain input; absent otherwise

    Rational delta;
    Rational eps1;
    Rational c1_prime;      // delta^2 * eps1
    Rational theta1_prime;  // 1 - delta * eps1

    std::optional<Rational> eps;  // local-minimality parameter, when the chain picks one
    std::optional<Rational> c1, theta1;                    // k=1 conclusions
    std::optional<Rational> eps2, c2_prime, theta2_prime;  // k=2 intermediate chain
    std::optional<Rational> c2, theta2;                    // k=2 conclusions

    std::vector<std::pair<std::string, std::string>> notes;  // constant -> formula

    /// Norm-bound coefficient C_k of the level-k hypothesis, when defined.
    std::optional<Rational> norm_coeff(int k) const {
        if (k == 1) return c1 ? c1 : std::optional<Rational>(c1_prime);
        if (k == 2) return c2 ? c2 : c2_prime;
        return std::nullopt;
    }
    /// Spectral threshold theta the level-k statement assumes, when defined.
    std::optional<Rational> spectral_threshold(int k) const {
        if (k == 1) return theta1 ? theta1 : std::optional<Rational>(theta1_prime);
        if (k == 2) return theta2 ? theta2 : theta2_prime;
        return std::nullopt;
    }
};

/// The k=1 chain: delta = eps = 1/16, eps1 = 1/32, and the small-implies-thin
/// constants they induce. theta1 also has to clear (1/4)/(1/2 - 7/32) = 8/9
/// for the final lambda_1 step, which 511/512 already does.
inline ConstantsLedger ledger_k1() {
    ConstantsLedger L;
    L.delta = Rational(1, 16);
    L.eps = Rational(1, 16);
    L.eps1 = Rational(1, 32);
    L.c1_prime = L.delta * L.delta * L.eps1;
    L.theta1_prime = 1 - L.delta * L.eps1;
    L.c1 = L.c1_prime;
    const Rational lam_floor = Rational(1, 4) / (Rational(1, 2) - Rational(7, 32));
    L.theta1 = L.theta1_prime > lam_floor ? L.theta1_prime : lam_floor;
    L.notes = {
        {"delta", "k=1 chain input: 1/16"},
        {"eps", "k=1 chain input: 1/16"},
        {"eps1", "k=1 chain input: 1/32"},
        {"c1_prime", "small-implies-thin: delta^2 * eps1"},
        {"theta1_prime", "small-implies-thin: 1 - delta * eps1"},
        {"c1", "k=1 bound: C1 = C1'"},
        {"theta1", "k=1 bound: max(theta1', (1/4)/(1/2 - 7/32))"},
    };
    return L;
}

/// The k=2 dichotomy chain for inputs (eps2, delta): eps1 = eps2/60 feeds
/// small-implies-thin, then theta2' = max(theta1', 1 - C1' eps2 / 60) and
/// C2' = (C1')^2 eps2 / 60. No local-minimality parameter is picked here.
inline ConstantsLedger ledger_k2_alternative(const Rational& eps2, const Rational& delta) {
    if (!(eps2 > 0 && eps2 <= 1)) throw BadEpsilon("eps2 must lie in (0, 1]");
    if (!(delta > 0 && delta < 1)) throw BadArgs("delta must lie in (0, 1)");
    ConstantsLedger L;
    L.delta = delta;
    L.eps2 = eps2;
    L.eps1 = eps2 / 60;
    L.c1_prime = delta * delta * L.eps1;
    L.theta1_prime = 1 - delta * L.eps1;
    const Rational other = 1 - L.c1_prime * eps2 / 60;
    L.theta2_prime = L.theta1_prime > other ? L.theta1_prime : other;
    L.c2_prime = L.c1_prime * L.c1_prime * eps2 / 60;
    L.notes = {
        {"eps2", "k=2 dichotomy input"},
        {"delta", "k=2 dichotomy input"},
        {"eps1", "k=2 dichotomy: eps2 / 60"},
        {"c1_prime", "small-implies-thin: delta^2 * eps1"},
        {"theta1_prime", "small-implies-thin: 1 - delta * eps1"},
        {"theta2_prime", "k=2 dichotomy: max(theta1', 1 - C1' eps2 / 60)"},
        {"c2_prime", "k=2 dichotomy: (C1')^2 eps2 / 60"},
    };
    return L;
}

/// The full k=2 chain from the single input eps: eps2 = 35 eps / 100 and
/// delta = eps / 1000 feed the dichotomy chain, then
///   eps    = min(C1'/4, input/1000),
///   theta2 = max(theta2', (2 + 3 input/10) / (2 + 61 input/2000)),
///   C2     = C2'.
/// Note the second theta2 operand exceeds 1 for every positive input.
/// Normalized gaps range up to 2, so dense complexes can still clear it
/// (boundaries of simplices do) while sparser ones cannot; the value is kept
/// exactly as the chain produces it and scans report the comparison honestly.
inline ConstantsLedger ledger_k2(const Rational& input_eps) {
    if (!(input_eps > 0 && input_eps <= 1)) throw BadEpsilon("input eps must lie in (0, 1]");
    ConstantsLedger L =
        ledger_k2_alternative(input_eps * 35 / 100, input_eps / 1000);
    L.input_eps = input_eps;
    const Rational cap_a = L.c1_prime / 4;
    const Rational cap_b = input_eps / 1000;
    L.eps = cap_a < cap_b ? cap_a : cap_b;
    const Rational ratio = (2 + input_eps * 3 / 10) / (2 + input_eps * 61 / 2000);
    L.theta2 = *L.theta2_prime > ratio ? *L.theta2_prime : ratio;
    L.c2 = L.c2_prime;
    L.notes.insert(L.notes.begin(), {"input_eps", "k=2 chain input"});
    L.notes.push_back({"eps", "k=2 bound: min(C1'/4, input/1000)"});
    L.notes.push_back({"theta2",
                       "k=2 bound: max(theta2', (2 + 3 input/10) / (2 + 61 input/2000))"});
    L.notes.push_back({"c2", "k=2 bound: C2 = C2'"});
    return L;
}

/// One evaluation of the thin-implies-Laplacian bound.
struct ThinLaplacianRecord {
    int k = 0;
    bool trivial = false;  // phi == 0: hypotheses and conclusion degenerate
    Rational lhs;          // ||d phi||, exact
    double lambda = 0;     // lambda_0 for k=0, min link gap over X^(k-1) else
    double coeff = 0;      // proven multiplier on ||phi||
    double rhs = 0;
    bool pass = false;
};

/// Checks the hypotheses exactly and then compares ||d phi|| against the
/// proven lower bound. k=0 needs phi delta-thin and yields
/// lambda_0 (1 - delta) ||phi||; k>=1 needs phi eps-locally minimal and
/// (r, delta)-thin and yields
/// (((r+1)/2 - delta - eps/2) lambda_k (k+1) - k) ||phi||.
/// r and eps are ignored for k=0.
inline ThinLaplacianRecord verify_thin_laplacian(const WeightedComplex& X, const Cochain& phi,
                                                 const Rational& delta,
                                                 const Rational& r = Rational(1),
                                                 const Rational& eps = Rational(1, 2),
                                                 double tol = 1e-9) {
    check_host(X, phi, "verify_thin_laplacian");
    const int k = phi.k();
    const int n = X.dimension();
    if (k < 0 || k > n - 1) throw BadDimensions("thin-laplacian bound needs 0 <= k <= n-1");
    if (!(delta > 0 && delta < Rational(1, 2))) throw BadArgs("delta must lie in (0, 1/2)");

    ThinLaplacianRecord rec;
    rec.k = k;
    rec.trivial = phi.is_zero();
    rec.lhs = norm(X, differential(X, phi));
    const Rational nrm = norm(X, phi);

    if (k == 0) {
        if (nrm > delta * X.total_weight(0))
            throw HypothesisNotMet("phi is delta-thick: ||phi|| > delta * m(X^(0))");
        rec.lambda = spectral_gap(WeightedGraph::from_complex_skeleton(X));
        rec.coeff = rec.lambda * to_double(1 - delta);
    } else {
        if (!(eps > 0 && eps < 1)) throw BadArgs("eps must lie in (0, 1)");
        if (!(r > 0 && r <= 1)) throw BadArgs("r must lie in (0, 1]");
        if (!rec.trivial) {
            if (!is_eps_locally_minimal(X, phi, eps))
                throw HypothesisNotMet("phi is not eps-locally minimal");
            if (!is_r_delta_thin(X, phi, r, delta))
                throw HypothesisNotMet("phi is (r, delta)-thick");
        }
        double lam = 0;
        bool first = true;
        for (std::size_t ti = 0; ti < X.count(k - 1); ++ti) {
            const double g = link_gap(X, X.cell(k - 1, ti));
            if (first || g < lam) lam = g;
            first = false;
        }
        rec.lambda = lam;
        rec.coeff =
            to_double((r + 1) / 2 - delta - eps / 2) * lam * (k + 1) - k;
    }
    rec.rhs = rec.coeff * to_double(nrm);
    rec.pass = to_double(rec.lhs) >= rec.rhs - tol;
    return rec;
}

/// Knobs for scan_isoperimetry. Leaving an override disengaged uses the
/// chain defaults for the scanned level (k=0: eps = 1/16 and no norm bound;
/// k=1: the k=1 chain; k=2: the k=2 chain at input_eps, default 1/6).
struct ScanOptions {
    std::optional<Rational> eps;         // local-minimality parameter override
    std::optional<Rational> norm_coeff;  // C_k override
    std::optional<Rational> input_eps;   // k=2 chain input
    std::optional<double> target;        // target ratio override
    bool enforce_spectral = false;       // throw when the lambda hypothesis fails
    std::uint64_t cap = std::uint64_t(1) << 26;
    std::uint64_t samples = 4096;  // sample count once 2^#cells exceeds cap
    std::uint64_t seed = 0xC0FFEEULL;
    int threads = 1;
    double tol = 1e-9;
};

struct ScanCochainRecord {
    Cochain phi;
    Rational phi_norm;
    Rational dphi_norm;
};

/// Outcome of one hypothesis scan: every nonzero cochain at the scanned level
/// (exhaustive under the cap, seeded-sampled above it) is filtered through
/// the level-k hypotheses, and the worst ||d phi|| / ||phi|| among survivors
/// is compared against the target ratio. Vacuous scans (no survivor) pass.
struct IsoperimetryScan {
    int k = 0;
    std::optional<ConstantsLedger> ledger;  // chain referenced (absent for k=0)
    Rational eps_used;
    std::optional<Rational> norm_coeff_used;
    std::optional<Rational> norm_bound;  // norm_coeff * m(X^(k))
    double target = 0;
    double spectral_value = 0;  // min over the lambda_j the statement reads
    std::optional<double> spectral_threshold;  // absent for k=0 (needs only > 0)
    bool spectral_ok = false;                  // reported; enforced only on request
    bool exhaustive = true;
    std::uint64_t enumerated = 0;  // nonzero cochains examined
    std::uint64_t in_hypothesis = 0;
    std::optional<ScanCochainRecord> worst;  // argmin of the ratio
    std::optional<double> worst_ratio;
    bool vacuous = true;
    bool pass = true;
    std::uint64_t seed = 0;
    std::uint64_t cap = 0;
};

/// Scans level k in {0, 1, 2} of X against the matching isoperimetric
/// statement. Deterministic given (complex, seed, constants): exhaustive
/// enumeration merges per-block results in block order, and sampling is a
/// fixed serial walk of the seeded generator regardless of thread count.
inline IsoperimetryScan scan_isoperimetry(const WeightedComplex& X, int k,
                                          const ScanOptions& opts = {}) {
    const int n = X.dimension();
    if (k < 0 || k > 2) throw BadK("scan level must be one of 0, 1, 2");
    if (k > n - 1) throw BadK("scan level must not exceed n - 1");

    IsoperimetryScan scan;
    scan.k = k;
    scan.seed = opts.seed;
    scan.cap = opts.cap;

    // Only the gaps the level-k statement reads: lambda_j for j <= k. Links
    // above the scanned level play no role in the statement, so they are not
    // touched (and need not be connected).
    std::vector<double> lams(static_cast<std::size_t>(k) + 1,
                             std::numeric_limits<double>::infinity());
    for (int j = 0; j <= k; ++j)
        for (const auto& tau : X.cells(j - 1))
            lams[static_cast<std::size_t>(j)] =
                std::min(lams[static_cast<std::size_t>(j)], link_gap(X, tau));
    double lam_min = lams[0];
    for (int j = 1; j <= k; ++j) lam_min = std::min(lam_min, lams[static_cast<std::size_t>(j)]);
    scan.spectral_value = lam_min;

    if (k == 0) {
        scan.eps_used = opts.eps ? *opts.eps : Rational(1, 16);
        if (!(scan.eps_used > 0 && scan.eps_used < 1))
            throw BadEpsilon("k=0 scan needs eps in (0, 1)");
        scan.norm_coeff_used = opts.norm_coeff;
        scan.spectral_ok = lams[0] > opts.tol;
        scan.target = opts.target
                          ? *opts.target
                          : lams[0] * to_double((1 - scan.eps_used) / 2);
    } else {
        ConstantsLedger L = k == 1 ? ledger_k1()
                                   : ledger_k2(opts.input_eps ? *opts.input_eps
                                                              : Rational(1, 6));
        scan.eps_used = opts.eps ? *opts.eps : *L.eps;
        if (scan.eps_used < 0) throw BadEpsilon("scan needs eps >= 0");
        scan.norm_coeff_used = opts.norm_coeff ? opts.norm_coeff : L.norm_coeff(k);
        const Rational theta = *L.spectral_threshold(k);
        scan.spectral_threshold = to_double(theta);
        scan.spectral_ok = lam_min >= *scan.spectral_threshold - opts.tol;
        if (opts.target) {
            scan.target = *opts.target;
        } else if (k == 1) {
            scan.target = 0.25;
        } else {
            // conservative value the k=2 case-1 chain actually proves
            scan.target = to_double(*L.input_eps * 65 / 2000);
        }
        scan.ledger = std::move(L);
    }
    if (opts.enforce_spectral && !scan.spectral_ok)
        throw HypothesisNotMet("spectral hypothesis failed and enforcement is on");
    if (scan.norm_coeff_used)
        scan.norm_bound = *scan.norm_coeff_used * X.total_weight(k);

    const std::size_t cells = X.count(k);
    const auto& w = X.weights(k);
    scan.exhaustive = cells < 63 && (std::uint64_t(1) << cells) <= opts.cap;

    // Hypothesis filter shared by both enumeration modes. The link cache is
    // pre-warmed so parallel blocks only ever read it.
    detail::LinkCache links(X);
    if (k >= 1)
        for (int j = 0; j <= k - 1; ++j)
            for (std::size_t ti = 0; ti < X.count(j); ++ti) links.at(j, ti, k);
    EnumOptions inner;
    inner.cap = opts.cap;
    inner.threads = 1;
    const Rational bound0 = (1 + scan.eps_used) * X.total_weight(0) / 2;
    auto in_hypothesis = [&](const Cochain& phi, const Rational& nrm) {
        if (scan.norm_bound && nrm > *scan.norm_bound) return false;
        if (k == 0) return nrm <= bound0;
        return detail::eps_locally_minimal_with(X, phi, scan.eps_used, links, inner);
    };

    detail::RatioBest best;
    std::uint64_t examined = 0, survivors = 0;

    if (scan.exhaustive) {
        const std::uint64_t total = std::uint64_t(1) << cells;
        const auto blocks = split_blocks(total, opts.threads);
        struct Part {
            detail::RatioBest best;
            std::uint64_t examined = 0, survivors = 0;
        };
        std::vector<Part> parts(blocks.size());
        run_blocks(blocks.size(), opts.threads, [&](std::size_t bi) {
            const auto [from, to] = blocks[bi];
            Part& part = parts[bi];
            Cochain cur = Cochain::zero(X, k);
            Rational nrm = 0;
            std::uint64_t mask = detail::gray(from);
            while (mask) {
                const int b = std::countr_zero(mask);
                cur.flip(static_cast<std::size_t>(b));
                nrm += w[static_cast<std::size_t>(b)];
                mask &= mask - 1;
            }
            for (std::uint64_t i = from; i < to; ++i) {
                if (i != from) {
                    const auto b = static_cast<std::size_t>(std::countr_zero(i));
                    if (cur.get(b)) nrm -= w[b];
                    else nrm += w[b];
                    cur.flip(b);
                }
                if (nrm == 0) continue;
                ++part.examined;
                if (!in_hypothesis(cur, nrm)) continue;
                ++part.survivors;
                part.best.offer_min(norm(X, differential(X, cur)), nrm, cur);
            }
        });
        for (const auto& p : parts) {
            examined += p.examined;
            survivors += p.survivors;
            if (p.best.has) best.offer_min(p.best.num, p.best.den, p.best.witness);
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        const std::size_t nwords = (cells + 63) / 64;
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            Cochain cur = Cochain::zero(X, k);
            bool any = false;
            for (std::size_t wi = 0; wi < nwords; ++wi) {
                std::uint64_t word = rng();
                const std::size_t base = wi * 64;
                for (std::size_t b = base; b < std::min(base + 64, cells); ++b)
                    if ((word >> (b - base)) & 1) {
                        cur.flip(b);
                        any = true;
                    }
            }
            if (!any) continue;
            ++examined;
            const Rational nrm = norm(X, cur);
            if (!in_hypothesis(cur, nrm)) continue;
            ++survivors;
            best.offer_min(norm(X, differential(X, cur)), nrm, cur);
        }
    }

    scan.enumerated = examined;
    scan.in_hypothesis = survivors;
    scan.vacuous = !best.has;
    if (best.has) {
        scan.worst = ScanCochainRecord{best.witness, best.den, best.num};
        scan.worst_ratio = to_double(best.num) / to_double(best.den);
        scan.pass = *scan.worst_ratio >= scan.target - opts.tol;
    } else {
        scan.pass = true;
    }
    return scan;
}

enum class K2AltBranch { S2, Thin, Neither };

inline const char* k2alt_branch_name(K2AltBranch b) {
    switch (b) {
        case K2AltBranch::S2: return "S2";
        case K2AltBranch::Thin: return "thin";
        default: return "neither";
    }
}

/// Evaluation of the k=2 dichotomy on one 2-cochain. Both branches are
/// always evaluated and recorded; `branch` labels the first that holds
/// (S2 before thin, `Neither` is reportable data, not an error).
struct K2AltRecord {
    K2AltBranch branch = K2AltBranch::Neither;
    bool trivial = false;           // phi == 0; thin branch holds degenerately
    double spectral_value = 0;      // min(lambda_0, lambda_1, lambda_2)
    double spectral_threshold = 0;  // theta_2'
    bool spectral_ok = false;       // reported, not enforced
    std::vector<std::size_t> s2;    // vertices with ||phi_v|| > C1' m(X_v^(1))
    Rational s2_norm_sum;           // sum over S2 of ||phi_v||
    Rational s2_norm_floor;         // (9/20) ||phi||
    bool s2_sum_ok = false;
    Rational dphi_norm;        // ||d phi||
    Rational s2_link_diff_sum; // sum over S2 of ||d_v phi_v||
    Rational s2_diff_rhs;      // s2_link_diff_sum - (11 eps2 / 9) s2_norm_sum
    bool s2_diff_ok = false;
    Rational thin_r_required;  // 1/3 + eps2/15
    std::optional<ThinnessReport> thin;  // absent when phi == 0
    bool thin_ok = false;
};

/// Checks the k=2 dichotomy: under ||phi|| <= C2' m(X^(2)) either the heavy
/// vertex set S2 = {v : ||phi_v|| > C1' m(X_v^(1))} carries at least 9/20 of
/// the norm and the differential dominates the link differentials up to the
/// 11 eps2 / 9 defect, or phi is (1/3 + eps2/15, delta)-thin. All branch
/// inequalities are exact; only the reported spectral comparison uses tol.
inline K2AltRecord verify_k2_alternative(const WeightedComplex& X, const Cochain& phi,
                                         const ConstantsLedger& ledger, double tol = 1e-9) {
    check_host(X, phi, "verify_k2_alternative");
    if (X.dimension() <= 2) throw BadDimension("the k=2 dichotomy needs dimension > 2");
    if (phi.k() != 2) throw BadDimensions("verify_k2_alternative expects a 2-cochain");
    if (!ledger.eps2 || !ledger.c2_prime || !ledger.theta2_prime)
        throw BadArgs("ledger lacks the k=2 dichotomy chain");

    const Rational phi_norm = norm(X, phi);
    if (phi_norm > *ledger.c2_prime * X.total_weight(2))
        throw HypothesisNotMet("||phi|| > C2' m(X^(2))");

    K2AltRecord rec;
    rec.trivial = phi.is_zero();

    // The dichotomy reads lambda_0, lambda_1, lambda_2 only; links above
    // level 1 are not part of its hypotheses.
    double dichotomy_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 2; ++j)
        for (const auto& tau : X.cells(j - 1))
            dichotomy_min = std::min(dichotomy_min, link_gap(X, tau));
    rec.spectral_value = dichotomy_min;
    rec.spectral_threshold = to_double(*ledger.theta2_prime);
    rec.spectral_ok = rec.spectral_value >= rec.spectral_threshold - tol;

    rec.dphi_norm = norm(X, differential(X, phi));
    for (std::size_t vi = 0; vi < X.count(0); ++vi) {
        const Simplex& v = X.cell(0, vi);
        const Rational link_edge_total = X.weight(0, vi) / 2;  // m(X_v^(1))
        const Rational loc = localized_norm(X, phi, v);
        if (loc > ledger.c1_prime * link_edge_total) {
            rec.s2.push_back(vi);
            rec.s2_norm_sum += loc;
            rec.s2_link_diff_sum += localized_diff_norm(X, phi, v);
        }
    }
    rec.s2_norm_floor = phi_norm * 9 / 20;
    rec.s2_sum_ok = rec.s2_norm_sum >= rec.s2_norm_floor;
    rec.s2_diff_rhs = rec.s2_link_diff_sum - *ledger.eps2 * 11 * rec.s2_norm_sum / 9;
    rec.s2_diff_ok = rec.dphi_norm >= rec.s2_diff_rhs;

    rec.thin_r_required = Rational(1, 3) + *ledger.eps2 / 15;
    if (rec.trivial) {
        rec.thin_ok = true;  // 0 >= r (k+1) 0 for any r
    } else {
        rec.thin = thinness(X, phi, ledger.delta);
        rec.thin_ok = rec.thin->r_star >= rec.thin_r_required;
    }

    if (rec.trivial) rec.branch = K2AltBranch::Thin;
    else if (rec.s2_sum_ok && rec.s2_diff_ok) rec.branch = K2AltBranch::S2;
    else if (rec.thin_ok) rec.branch = K2AltBranch::Thin;
    else rec.branch = K2AltBranch::Neither;
    return rec;
}

}  // namespace hdx
