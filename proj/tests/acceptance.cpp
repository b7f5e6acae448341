// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Every numeric expectation is either exact rational arithmetic or a pinned
// float tolerance of 1e-9; stated runtime budgets are enforced.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hdx/corpus.hpp"
#include "hdx/expansion.hpp"
#include "hdx/generators.hpp"
#include "hdx/io.hpp"
#include "hdx/isoperimetry.hpp"
#include "hdx/minimality.hpp"
#include "hdx/overlap.hpp"

using namespace hdx;

namespace {

struct Failure {
    std::string message;
};

void need(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

Cochain random_cochain(const WeightedComplex& X, int k, std::mt19937_64& rng) {
    Cochain c(k, X.count(k), X.hash());
    for (std::size_t i = 0; i < X.count(k); ++i)
        if (rng() & 1u) c.set(i, true);
    return c;
}

// ---- criterion 1: weight laws, recomputed from scratch ----------------

void criterion_weight_laws() {
    for (const auto& entry : corpus()) {
        const auto& X = entry.X;
        const int n = X.dimension();
        for (int k = -1; k < n; ++k) {
            for (std::size_t ti = 0; ti < X.count(k); ++ti) {
                const Simplex& tau = X.cell(k, ti);
                Rational cofacets = 0;
                for (std::size_t si = 0; si < X.count(k + 1); ++si)
                    if (tau.subset_of(X.cell(k + 1, si))) cofacets += X.weight(k + 1, si);
                need(X.weight(k, ti) == cofacets,
                     entry.name + ": summation law fails at " + tau.str());
                Rational tops = 0;
                for (std::size_t si = 0; si < X.count(n); ++si)
                    if (tau.subset_of(X.cell(n, si))) tops += X.weight(n, si);
                need(X.weight(k, ti) == Rational(Integer(factorial_u64(n - k))) * tops,
                     entry.name + ": closed form fails at " + tau.str());
            }
        }
        for (int k = -1; k <= n; ++k)
            for (int l = k; l <= n; ++l)
                need(X.total_weight(k) * Integer(factorial_u64(k + 1)) ==
                         X.total_weight(l) * Integer(factorial_u64(l + 1)),
                     entry.name + ": totals ladder fails at (" + std::to_string(k) + ", " +
                         std::to_string(l) + ")");
    }
}

// ---- criterion 2: Cheeger bounds over every proper subset --------------

void criterion_cheeger() {
    std::size_t graphs = 0;
    for (const auto& entry : corpus()) {
        if (entry.X.count(0) > 12) continue;
        const auto G = WeightedGraph::from_complex_skeleton(entry.X);
        if (!G.connected()) continue;
        ++graphs;
        const std::size_t nv = G.order();
        for (std::uint64_t mask = 1; mask + 1 < (1ull << nv); ++mask) {
            std::vector<int> u;
            for (std::size_t i = 0; i < nv; ++i)
                if (mask >> i & 1ull) u.push_back(static_cast<int>(i));
            const auto rec = cheeger_check(G, u, 1e-9);
            need(rec.cut_ok, entry.name + ": cut bound fails at mask " + std::to_string(mask));
            need(rec.inner_ok,
                 entry.name + ": inner bound fails at mask " + std::to_string(mask));
        }
    }
    need(graphs >= 30, "too few corpus graphs exercised: " + std::to_string(graphs));

    // equality case: K3, U one vertex
    const auto K3 = WeightedGraph::from_complex_skeleton(corpus_complex("hollow-triangle"));
    const auto rec = cheeger_check(K3, {0});
    need(rec.cut == 2, "K3 equality: cut is " + format_rational(rec.cut));
    need(std::abs(rec.bound_cut_rhs - 2.0) <= 1e-9,
         "K3 equality: bound is " + std::to_string(rec.bound_cut_rhs));
    need(std::abs(rec.lambda - 1.5) <= 1e-9, "K3 gap drifted");
}

// ---- criterion 3: spectral fixtures and descent -------------------------

void criterion_spectral() {
    auto gap_of = [](const WeightedComplex& X) {
        return spectral_gap(WeightedGraph::from_complex_skeleton(X));
    };
    need(std::abs(gap_of(corpus_complex("hollow-triangle")) - 1.5) <= 1e-9, "lambda(K3)");
    need(std::abs(gap_of(corpus_complex("k4-graph")) - 4.0 / 3.0) <= 1e-9, "lambda(K4)");
    need(std::abs(gap_of(corpus_complex("fano-flag")) - (1.0 - std::sqrt(2.0) / 3.0)) <= 1e-9,
         "lambda(Heawood)");

    const auto P = spectral_profile(corpus_complex("tetrahedron"));
    need(P.lambda.size() == 3, "tetrahedron profile size");
    need(std::abs(P.lambda[0] - 4.0 / 3.0) <= 1e-9, "tetrahedron lambda_0");
    need(std::abs(P.lambda[1] - 1.5) <= 1e-9, "tetrahedron lambda_1");
    need(std::abs(P.lambda[2] - 2.0) <= 1e-9, "tetrahedron lambda_2");
    need(std::abs(P.lambda[0] - (2.0 - 1.0 / P.lambda[1])) <= 1e-9,
         "descent equality at k=0");
    need(std::abs(P.lambda[1] - (2.0 - 1.0 / P.lambda[2])) <= 1e-9,
         "descent equality at k=1");
    need(descent_check(P).all_ok, "tetrahedron descent report");
}

// ---- criterion 4: exact F2 identities on seeded cochains ----------------

void criterion_f2_identities() {
    std::vector<std::pair<const CorpusEntry*, int>> pairs;
    for (const auto& entry : corpus())
        for (int k = 0; k <= entry.X.dimension(); ++k) pairs.push_back({&entry, k});
    const std::uint64_t per = 10000 / pairs.size() + 1;
    std::mt19937_64 rng(0xACCE97ull);
    std::uint64_t total = 0;
    for (const auto& [entry, k] : pairs) {
        const auto& X = entry->X;
        for (std::uint64_t s = 0; s < per; ++s, ++total) {
            const Cochain phi = random_cochain(X, k, rng);
            const Rational nphi = norm(X, phi);
            for (int j = 0; j < k; ++j) {
                Rational sum = 0;
                for (std::size_t ti = 0; ti < X.count(j); ++ti)
                    sum += localized_norm(X, phi, X.cell(j, ti));
                need(sum == Rational(binomial_int(k + 1, j + 1)) * nphi,
                     entry->name + ": localization sum at j=" + std::to_string(j));
            }
            if (k == X.dimension()) continue;  // no differential above the top level
            const Rational ndphi = norm(X, differential(X, phi));
            need(ndphi <= nphi, entry->name + ": ||d phi|| > ||phi||");
            Rational vsum = 0;
            for (std::size_t vi = 0; vi < X.count(0); ++vi)
                vsum += localized_diff_norm(X, phi, X.cell(0, vi));
            need(k * ndphi + nphi >= vsum, entry->name + ": vertex differential bound");
            if (k >= 1) {
                Rational tsum = 0;
                for (std::size_t ti = 0; ti < X.count(k - 1); ++ti)
                    tsum += localized_diff_norm(X, phi, X.cell(k - 1, ti));
                need(ndphi >= tsum - k * nphi,
                     entry->name + ": facet differential bound");
            }
        }
    }
    need(total >= 10000, "too few cochains sampled: " + std::to_string(total));
}

// ---- criterion 5: expansion constants ------------------------------------

void criterion_expansion_constants() {
    for (const auto& entry : corpus()) {
        const auto& X = entry.X;
        need(coboundary_expansion(X, -1).value == ExtRational::of(1),
             entry.name + ": eps_{-1} != 1");
        need(cocycle_expansion(X, -1).value == ExtRational::of(1),
             entry.name + ": eps~_{-1} != 1");
        need(cofilling(X, -1).value == ExtRational::of(1), entry.name + ": mu_{-1} != 1");
        for (int k = 0; k < X.dimension(); ++k) {
            if (X.count(k) > 12) continue;
            const auto mu = cofilling(X, k).value;
            const auto tld = cocycle_expansion(X, k).value;
            need(!mu.infinite, entry.name + ": mu infinite at k=" + std::to_string(k));
            if (tld.infinite)
                need(mu.value == 0, entry.name + ": mu nonzero under infinite eps~");
            else
                need(mu.value * tld.value == 1,
                     entry.name + ": mu * eps~ != 1 at k=" + std::to_string(k));
        }
    }
    const auto& fano = corpus_complex("fano-flag");
    const auto eps = coboundary_expansion(fano, 0, SearchMode::Exhaustive);
    // the walk covers all 2^14 states; the two members of B^0 are not candidates
    need(eps.searched == (1ull << 14) - 2, "fano search was not exhaustive");
    need(!eps.value.infinite && eps.value.value >= Rational(1, 6),
         "eps_0(fano) fell below 1/6: " + format_ext(eps.value));
    need(lmm_bound(1, 0, 6) == Rational(1, 6), "order-6 building bound");
}

// ---- criterion 6: minimization contract ----------------------------------

void criterion_minimization() {
    std::vector<std::pair<const CorpusEntry*, int>> pairs;
    for (const auto& entry : corpus()) {
        const auto& X = entry.X;
        std::size_t below = 1;  // the empty simplex
        for (int j = 0; j <= X.dimension(); ++j) {
            if (j > 0) below += X.count(j - 1);
            if (X.count(j) <= 24 && below <= 40) pairs.push_back({&entry, j});
        }
    }
    const std::uint64_t per = 1000 / pairs.size() + 1;
    const Rational eps_grid[] = {Rational(1, 2), Rational(1, 8), Rational(1, 32)};
    std::mt19937_64 rng(0x1717ull);
    std::uint64_t runs = 0;
    for (const auto& [entry, k] : pairs) {
        const auto& X = entry->X;
        Rational min_m = X.weight(-1, 0);
        for (int j = 0; j < k; ++j)
            for (std::size_t ti = 0; ti < X.count(j); ++ti)
                min_m = std::min(min_m, X.weight(j, ti));
        for (std::uint64_t s = 0; s < per; ++s, ++runs) {
            const Cochain phi = random_cochain(X, k, rng);
            const Rational eps = eps_grid[runs % 3];
            const auto T = eps_local_minimize(X, phi, eps);
            Cochain recon = T.input;
            recon.xor_with(differential(X, T.psi));
            need(recon == T.corrected, entry->name + ": corrected != input + d psi");
            need(is_eps_locally_minimal(X, T.corrected, eps),
                 entry->name + ": output not eps-locally minimal");
            need(norm(X, T.corrected) <= norm(X, phi), entry->name + ": norm grew");
            need(Rational(static_cast<long long>(T.steps.size())) * eps * min_m <=
                     norm(X, phi),
                 entry->name + ": step count bound violated");
        }
    }
    need(runs >= 1000, "too few minimization runs: " + std::to_string(runs));
}

// ---- criterion 7: constant ledger ----------------------------------------

void criterion_ledger() {
    const auto L1 = ledger_k1();
    need(*L1.c1 == Rational(1, 8192), "C1");
    need(*L1.theta1 == Rational(511, 512), "theta1");
    // hand substitution, written out independently of the ledger code path
    const Rational delta(1, 16), eps1(1, 32);
    need(delta * delta * eps1 == Rational(1, 8192), "C1 by hand");
    need(1 - delta * eps1 == Rational(511, 512), "theta1' by hand");
    need(Rational(1, 4) / (Rational(1, 2) - Rational(7, 32)) == Rational(8, 9),
         "lambda floor by hand");
    need(*L1.theta1 == std::max(Rational(511, 512), Rational(8, 9)), "theta1 is the max");

    const auto L2 = ledger_k2(Rational(1, 6));
    need(*L2.eps2 == Rational(7, 120), "eps2");
    need(L2.delta == Rational(1, 6000), "delta");
    need(Rational(1, 6) * Rational(35, 100) == Rational(7, 120), "eps2 by hand");
    need(Rational(1, 6) / 1000 == Rational(1, 6000), "delta by hand");
    need(L2.eps1 == Rational(7, 7200), "eps1 = eps2/60 by hand");
    need(*L2.theta2 > 1, "theta2 stayed above 1");
}

// ---- criterion 8: isoperimetry scans --------------------------------------

void criterion_scans() {
    for (const auto& entry : corpus()) {
        const auto S = scan_isoperimetry(entry.X, 0);
        need(S.exhaustive, entry.name + ": k=0 scan not exhaustive");
        need(S.pass, entry.name + ": k=0 scan failed");
        need(S.enumerated + 1 == (1ull << entry.X.count(0)),
             entry.name + ": k=0 scan missed states");
    }
    for (const auto* name : {"k6-2skeleton", "hollow-tetrahedron", "glued-tetrahedra"}) {
        const auto S = scan_isoperimetry(corpus_complex(name), 1);
        need(S.vacuous && S.pass && S.in_hypothesis == 0,
             std::string(name) + ": k=1 baseline scan not vacuous-pass");
    }
    for (const auto* name : {"sphere-3d", "simplex-4d", "glued-tetrahedra"}) {
        const auto S = scan_isoperimetry(corpus_complex(name), 2);
        need(S.vacuous && S.pass && S.in_hypothesis == 0,
             std::string(name) + ": k=2 baseline scan not vacuous-pass");
    }
    ScanOptions o1;
    o1.norm_coeff = Rational(1, 4);
    o1.target = 0.25;
    const auto& HT = corpus_complex("hollow-tetrahedron");
    const auto S1 = scan_isoperimetry(HT, 1, o1);
    need(S1.worst.has_value() && S1.worst_ratio.has_value(),
         "override scan reported no worst cochain");
    need(norm(HT, S1.worst->phi) == S1.worst->phi_norm, "override witness norm mismatch");
    need(norm(HT, differential(HT, S1.worst->phi)) == S1.worst->dphi_norm,
         "override witness differential mismatch");
    need(S1.pass, "override scan missed its target");

    ScanOptions o2;
    o2.norm_coeff = Rational(1, 3);
    o2.eps = Rational(1, 4);
    o2.target = 0.1;
    const auto& RP = corpus_complex("rp2-6");
    const auto S2 = scan_isoperimetry(RP, 1, o2);
    need(S2.worst.has_value(), "rp2 override scan saw no cochain");
    need(norm(RP, differential(RP, S2.worst->phi)) == S2.worst->dphi_norm,
         "rp2 witness mismatch");

    // the k=2 dichotomy never lands on Neither for in-hypothesis inputs
    const auto L = ledger_k2(Rational(1, 6));
    std::mt19937_64 rng(0xD1C407ull);
    for (const auto* name : {"sphere-3d", "glued-tetrahedra", "simplex-4d"}) {
        const auto& X = corpus_complex(name);
        const Rational bound = *L.c2_prime * X.total_weight(2);
        std::vector<Cochain> inputs{Cochain(2, X.count(2), X.hash())};
        for (int s = 0; s < 32; ++s) inputs.push_back(random_cochain(X, 2, rng));
        for (const auto& phi : inputs) {
            if (norm(X, phi) > bound) continue;  // outside the stated hypothesis
            const auto R = verify_k2_alternative(X, phi, L);
            need(R.branch != K2AltBranch::Neither,
                 std::string(name) + ": dichotomy landed on Neither");
        }
    }
}

// ---- criterion 9: certificate determinism ---------------------------------

void criterion_certificate_determinism() {
    const auto& X = corpus_complex("sphere-3d");
    std::vector<std::string> dumps;
    for (int run = 0; run < 5; ++run)
        dumps.push_back(certificate_json(certify_2skeleton(X)).dump(2));
    for (int run = 1; run < 5; ++run)
        need(dumps[0] == dumps[static_cast<std::size_t>(run)],
             "certificate changed between runs");
    const auto c4 = certificate_json(certify_2skeleton(X, {}, EnumOptions{1ull << 26, 4}));
    need(dumps[0] == c4.dump(2), "certificate changed with 4 threads");
}

// ---- criterion 10: skeleton weight comparison ------------------------------

void criterion_skeleton() {
    const auto tet = WeightedComplex::build({Simplex{0, 1, 2, 3}},
                                            WeightKind::NormalizedHomogeneous);
    const auto cmp = skeleton_compare(tet, 2);
    need(cmp.ratio == 1, "tetrahedron M != 1");
    need(cmp.factor == 4, "tetrahedron factor != 4");
    need(cmp.bounds_ok, "tetrahedron bounds");
    const auto sk = tet.skeleton(2, WeightKind::NormalizedHomogeneous);
    for (std::size_t i = 0; i < sk.count(2); ++i) {
        const auto idx = tet.index_of(sk.cell(2, i));
        need(idx.has_value(), "skeleton cell missing upstairs");
        need(tet.weight(2, *idx) == 4 * sk.weight(2, i),
             "tetrahedron equality fails at " + sk.cell(2, i).str());
    }

    const auto glued = WeightedComplex::build({Simplex{0, 1, 2, 3}, Simplex{1, 2, 3, 4}},
                                              WeightKind::NormalizedHomogeneous);
    const auto gcmp = skeleton_compare(glued, 2);
    need(gcmp.ratio == 2, "glued M != 2");
    need(gcmp.bounds_ok, "glued bounds flag");
    const auto gsk = glued.skeleton(2, WeightKind::NormalizedHomogeneous);
    for (std::size_t i = 0; i < gsk.count(2); ++i) {
        const auto idx = glued.index_of(gsk.cell(2, i));
        need(idx.has_value(), "glued skeleton cell missing upstairs");
        const Rational up = glued.weight(2, *idx);
        const Rational down = gsk.weight(2, i);
        need(gcmp.lower_factor * down <= up && up <= gcmp.upper_factor * down,
             "glued two-sided bound fails at " + gsk.cell(2, i).str());
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;  // 0 = no stated budget
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> table = {
        {1, "weight laws exact on the corpus", 10.0, criterion_weight_laws},
        {2, "Cheeger bounds on all proper subsets", 60.0, criterion_cheeger},
        {3, "spectral fixtures and descent", 0.0, criterion_spectral},
        {4, "F2 identities on seeded cochains", 120.0, criterion_f2_identities},
        {5, "expansion constants and duality", 60.0, criterion_expansion_constants},
        {6, "minimization post-conditions", 0.0, criterion_minimization},
        {7, "constant ledger values", 0.0, criterion_ledger},
        {8, "isoperimetry scans", 0.0, criterion_scans},
        {9, "certificate determinism", 0.0, criterion_certificate_determinism},
        {10, "skeleton weight comparison", 0.0, criterion_skeleton},
    };
    int failures = 0;
    for (const auto& c : table) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const Failure& f) {
            error = f.message;
        } catch (const std::exception& e) {
            error = std::string("unexpected exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (error.empty() && c.budget_seconds > 0 && dt > c.budget_seconds) {
            std::ostringstream os;
            os << "runtime " << dt << "s exceeds budget " << c.budget_seconds << "s";
            error = os.str();
        }
        if (error.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.2fs)\n", c.id, c.title, dt);
        } else {
            std::printf("[FAIL] criterion %2d: %s (%.2fs) -- %s\n", c.id, c.title, dt,
                        error.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
