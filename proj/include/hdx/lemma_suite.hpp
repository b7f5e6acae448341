#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/corpus.hpp"
#include "hdx/expansion.hpp"
#include "hdx/generators.hpp"
#include "hdx/gf2.hpp"
#include "hdx/graph.hpp"
#include "hdx/isoperimetry.hpp"
#include "hdx/minimality.hpp"
#include "hdx/overlap.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

struct LemmaCheck {
    std::string name;
    bool pass;
    std::string detail;  // first counterexample, or a short stat line
};

struct LemmaSuiteOptions {
    std::uint64_t seed = 0x5EEDull;
    int f2_samples = 8;        // random cochains per (complex, k)
    int minimize_samples = 3;  // minimize runs per eligible (complex, k)
    double tol = 1e-9;
};

struct LemmaSuiteReport {
    std::uint64_t seed;
    std::vector<LemmaCheck> checks;
    bool all_pass;
};

namespace detail {

inline Cochain random_cochain(const WeightedComplex& X, int k, std::mt19937_64& rng) {
    Cochain phi(k, X.count(k), X.hash());
    for (std::size_t i = 0; i < X.count(k); ++i)
        if (rng() & 1u) phi.set(i, true);
    return phi;
}

class LemmaRunner {
public:
    explicit LemmaRunner(const LemmaSuiteOptions& opts) : opts_(opts) {}

    // One named check; body reports failures via fail(). Stats go to note().
    template <class Body>
    void check(const std::string& name, Body&& body) {
        current_ = {name, true, ""};
        body(*this);
        if (current_.pass && current_.detail.empty())
            current_.detail = "ok";
        checks_.push_back(current_);
    }

    void fail(const std::string& detail) {
        if (current_.pass) {
            current_.pass = false;
            current_.detail = detail;  // keep the first counterexample
        }
    }

    void require(bool cond, const std::string& detail) {
        if (!cond) fail(detail);
    }

    void note(const std::string& s) {
        if (current_.pass) current_.detail = s;
    }

    LemmaSuiteReport finish() {
        LemmaSuiteReport R;
        R.seed = opts_.seed;
        R.checks = std::move(checks_);
        R.all_pass = true;
        for (const auto& c : R.checks) R.all_pass = R.all_pass && c.pass;
        return R;
    }

    const LemmaSuiteOptions& opts() const { return opts_; }

private:
    LemmaSuiteOptions opts_;
    LemmaCheck current_;
    std::vector<LemmaCheck> checks_;
};

}  // namespace detail

/// Runs every exact identity and contract over the default corpus and
/// returns one pass/fail row per named check, with the first counterexample
/// (complex name + simplex/cochain) attached on failure.
inline LemmaSuiteReport lemma_suite(const LemmaSuiteOptions& opts = {}) {
    detail::LemmaRunner run(opts);
    const auto& corp = corpus();

    // m(tau) equals the sum of its cofacet weights, every level.
    run.check("weight-summation-law", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            for (int k = -1; k < X.dimension(); ++k) {
                for (std::size_t i = 0; i < X.count(k); ++i) {
                    Rational s = 0;
                    for (int c : X.cofacets_of(k, i)) s += X.weight(k + 1, c);
                    if (s != X.weight(k, i))
                        r.fail(e.name + ": m(" + X.cell(k, i).str() + ") != cofacet sum");
                }
            }
        }
    });

    // m(tau) = (n-k)! * sum of top weights over tops containing tau.
    run.check("weight-closed-form", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            const int n = X.dimension();
            for (int k = -1; k <= n; ++k) {
                const Integer fact = Integer(factorial_u64(n - k));
                for (std::size_t i = 0; i < X.count(k); ++i) {
                    Rational s = 0;
                    const auto& tau = X.cell(k, i);
                    for (std::size_t t = 0; t < X.count(n); ++t)
                        if (tau.subset_of(X.cell(n, t))) s += X.weight(n, t);
                    if (Rational(fact) * s != X.weight(k, i))
                        r.fail(e.name + ": closed form fails at " + tau.str());
                }
            }
        }
    });

    // (k+1)! m(X^(k)) = (l+1)! m(X^(l)) for all -1 <= k <= l <= n.
    run.check("weight-totals", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            for (int k = -1; k <= X.dimension(); ++k)
                for (int l = k; l <= X.dimension(); ++l) {
                    const Rational lhs = X.total_weight(k) * Integer(factorial_u64(k + 1));
                    const Rational rhs = X.total_weight(l) * Integer(factorial_u64(l + 1));
                    if (lhs != rhs)
                        r.fail(e.name + ": totals law fails at k=" + std::to_string(k) +
                               " l=" + std::to_string(l));
                }
        }
    });

    // NormalizedHomogeneous skeletons carry unit total mass at their top level.
    run.check("skeleton-normalization", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            if (X.dimension() < 2) continue;
            for (int l = 1; l < X.dimension(); ++l) {
                const auto S = X.skeleton(l, WeightKind::NormalizedHomogeneous);
                if (S.total_weight(l) != 1)
                    r.fail(e.name + ": skeleton(" + std::to_string(l) + ") total != 1");
            }
        }
    });

    // Link weights are host weights of the union; the link's empty cell
    // carries m(tau); vertex links satisfy m_v(X_v^(1)) = m(v)/2.
    run.check("link-weight-law", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            for (int j = 0; j < X.dimension(); ++j) {
                for (std::size_t i = 0; i < X.count(j); ++i) {
                    const auto& tau = X.cell(j, i);
                    const auto L = X.link(tau);
                    if (L.weight(-1, 0) != X.weight(j, i))
                        r.fail(e.name + ": m_tau(empty) != m(tau) at " + tau.str());
                    for (int k = 0; k <= L.dimension(); ++k)
                        for (std::size_t s = 0; s < L.count(k); ++s) {
                            const auto idx = X.index_of(tau.union_with(L.cell(k, s)));
                            if (!idx || X.weight(j + k + 1, *idx) != L.weight(k, s))
                                r.fail(e.name + ": link weight mismatch at " + tau.str());
                        }
                    if (X.dimension() >= 2 && j == 0 &&
                        L.total_weight(1) * 2 != X.weight(0, i))
                        r.fail(e.name + ": m_v(X_v^(1)) != m(v)/2 at " + tau.str());
                }
            }
        }
    });

    run.check("spectral-fixtures", [&](detail::LemmaRunner& r) {
        const double tol = r.opts().tol;
        auto gap = [&](const WeightedComplex& X) {
            return spectral_gap(WeightedGraph::from_complex_skeleton(X));
        };
        if (std::fabs(gap(corpus_complex("hollow-triangle")) - 1.5) > tol)
            r.fail("lambda(K3) != 3/2");
        if (std::fabs(gap(corpus_complex("k4-graph")) - 4.0 / 3.0) > tol)
            r.fail("lambda(K4) != 4/3");
        if (std::fabs(gap(corpus_complex("fano-flag")) - (1.0 - std::sqrt(2.0) / 3.0)) > tol)
            r.fail("lambda(Heawood) != 1 - sqrt(2)/3");
        if (std::fabs(gap(corpus_complex("petersen")) - 2.0 / 3.0) > tol)
            r.fail("lambda(Petersen) != 2/3");
        const auto P = spectral_profile(corpus_complex("tetrahedron"));
        const double want[] = {4.0 / 3.0, 1.5, 2.0};
        for (int k = 0; k < 3; ++k)
            if (std::fabs(P.lambda[k] - want[k]) > tol)
                r.fail("tetrahedron profile off at k=" + std::to_string(k));
        if (std::fabs(P.lambda[0] - (2.0 - 1.0 / P.lambda[1])) > tol ||
            std::fabs(P.lambda[1] - (2.0 - 1.0 / P.lambda[2])) > tol)
            r.fail("tetrahedron descent equalities fail");
    });

    // Descent inequalities hold on every corpus entry whose links are all
    // connected (the hypothesis of the descent theorem).
    run.check("spectral-descent", [&](detail::LemmaRunner& r) {
        int used = 0;
        for (const auto& e : corp) {
            if (e.X.dimension() < 2) continue;
            try {
                (void)local_spectral_expansion(e.X);
            } catch (const Error&) {
                continue;  // some link disconnected: theorem does not apply
            }
            ++used;
            const auto R = descent_check(spectral_profile(e.X), r.opts().tol);
            if (!R.all_ok) r.fail(e.name + ": descent inequality fails");
        }
        r.note("entries with all links connected: " + std::to_string(used));
        r.require(used >= 10, "too few connected-link entries");
    });

    // Equality case of the weighted Cheeger bound: K3 with a single vertex.
    run.check("cheeger-equality-k3", [&](detail::LemmaRunner& r) {
        const auto G = WeightedGraph::from_complex_skeleton(corpus_complex("hollow-triangle"));
        const auto rec = cheeger_check(G, {0}, r.opts().tol);
        r.require(rec.cut_ok && rec.inner_ok, "Cheeger bounds fail on K3 singleton");
        r.require(rec.cut == 2, "cut weight != 2");
        r.require(std::fabs(rec.bound_cut_rhs - 2.0) <= r.opts().tol, "cut bound != 2");
    });

    // Four exact cochain identities, seeded random sample per (complex, k).
    run.check("f2-identities", [&](detail::LemmaRunner& r) {
        std::mt19937_64 rng(r.opts().seed);
        long total = 0;
        for (const auto& e : corp) {
            const auto& X = e.X;
            for (int k = 0; k <= X.dimension(); ++k) {
                for (int s = 0; s < r.opts().f2_samples; ++s) {
                    const Cochain phi = detail::random_cochain(X, k, rng);
                    ++total;
                    const Rational nphi = norm(X, phi);
                    if (k < X.dimension()) {
                        if (norm(X, differential(X, phi)) > nphi)
                            r.fail(e.name + ": ||d phi|| > ||phi|| (k=" + std::to_string(k) + ")");
                    }
                    for (int j = 0; j < k; ++j) {
                        Rational s2 = 0;
                        for (std::size_t t = 0; t < X.count(j); ++t)
                            s2 += localized_norm(X, phi, X.cell(j, t));
                        if (s2 != Rational(binomial_int(k + 1, j + 1)) * nphi)
                            r.fail(e.name + ": localization identity fails (k=" +
                                   std::to_string(k) + ", j=" + std::to_string(j) + ")");
                    }
                    if (k >= 1 && k < X.dimension()) {
                        const Rational nd = norm(X, differential(X, phi));
                        Rational sv = 0;
                        for (std::size_t v = 0; v < X.count(0); ++v)
                            sv += localized_diff_norm(X, phi, X.cell(0, v));
                        if (k * nd + nphi < sv)
                            r.fail(e.name + ": vertex-local diff bound fails (k=" +
                                   std::to_string(k) + ")");
                        Rational st = 0;
                        for (std::size_t t = 0; t < X.count(k - 1); ++t)
                            st += localized_diff_norm(X, phi, X.cell(k - 1, t));
                        if (nd < st - k * nphi)
                            r.fail(e.name + ": codim-1 diff bound fails (k=" +
                                   std::to_string(k) + ")");
                    }
                }
            }
        }
        r.note("cochains checked: " + std::to_string(total));
    });

    // Expansion bookkeeping on small levels: the k = -1 constants are 1;
    // cofilling and cocycle expansion are exact reciprocals when finite;
    // systole is infinite exactly when H^k vanishes.
    run.check("expansion-constants", [&](detail::LemmaRunner& r) {
        int pairs = 0;
        for (const auto& e : corp) {
            const auto& X = e.X;
            const auto em = coboundary_expansion(X, -1);
            const auto et = cocycle_expansion(X, -1);
            const auto mm = cofilling(X, -1);
            if (!(em.value == ExtRational::of(1) && et.value == ExtRational::of(1) &&
                  mm.value == ExtRational::of(1)))
                r.fail(e.name + ": k=-1 constants are not all 1");
            for (int k = 0; k < X.dimension(); ++k) {
                if (X.count(k) > 12) continue;
                ++pairs;
                const auto tilde = cocycle_expansion(X, k);
                const auto mu = cofilling(X, k);
                if (mu.value.infinite) {
                    r.fail(e.name + ": mu_k came out infinite at k=" + std::to_string(k));
                } else if (tilde.value.infinite) {
                    // eps~_k = +inf <=> d vanishes on C^k <=> B^{k+1} = {0} <=> mu_k = 0
                    if (mu.value.value != 0)
                        r.fail(e.name + ": eps~_k infinite but mu_k != 0, k=" +
                               std::to_string(k));
                } else if (mu.value.value * tilde.value.value != 1) {
                    r.fail(e.name + ": mu_k * eps~_k != 1 at k=" + std::to_string(k));
                }
                const auto sys = systole(X, k);
                const bool hk_zero = cohomology_dim(X, k) == 0;
                if (sys.value.infinite != hk_zero)
                    r.fail(e.name + ": systole finiteness disagrees with H^k, k=" +
                           std::to_string(k));
            }
        }
        r.note("(complex, k) pairs: " + std::to_string(pairs));
    });

    // Exhaustive and quotient searches agree on tiny instances.
    run.check("expansion-mode-agreement", [&](detail::LemmaRunner& r) {
        for (const auto& name : {"triangle-full", "hollow-tetrahedron", "cycle-5", "rp2-6"}) {
            const auto& X = corpus_complex(name);
            for (int k = 0; k < X.dimension(); ++k) {
                if (X.count(k) > 15) continue;
                const auto a = coboundary_expansion(X, k, SearchMode::Exhaustive);
                const auto b = coboundary_expansion(X, k, SearchMode::Quotient);
                if (!(a.value == b.value))
                    r.fail(std::string(name) + ": eps_k differs between modes at k=" +
                           std::to_string(k));
                const auto c = cocycle_expansion(X, k, SearchMode::Exhaustive);
                const auto d = cocycle_expansion(X, k, SearchMode::Quotient);
                if (!(c.value == d.value))
                    r.fail(std::string(name) + ": eps~_k differs between modes at k=" +
                           std::to_string(k));
            }
        }
    });

    run.check("lmm-bound", [&](detail::LemmaRunner& r) {
        r.require(lmm_bound(1, 0, 6) == Rational(1, 6), "lmm_bound(1,0,6) != 1/6");
        r.require(lmm_bound(2, 1, 24) == Rational(1, binomial_int(3, 3) * binomial_int(3, 3) * 24),
                  "lmm_bound(2,1,24) mismatch");
    });

    // Minimizer post-conditions, exactly: corrected = input + d psi, the
    // result is eps-locally minimal, norm never increases, and the step
    // count respects ||phi|| / (eps * min m(tau)).
    run.check("minimization-contract", [&](detail::LemmaRunner& r) {
        std::mt19937_64 rng(r.opts().seed ^ 0xABCDull);
        const Rational eps_grid[] = {Rational(1, 2), Rational(1, 8), Rational(1, 32)};
        long runs = 0;
        for (const auto& e : corp) {
            const auto& X = e.X;
            if (X.dimension() < 1) continue;
            for (int k = 0; k <= X.dimension(); ++k) {
                if (X.count(k) > 24) continue;
                bool tractable = true;  // coset searches happen in links of dim < k
                for (int j = 0; j < k; ++j)
                    for (std::size_t t = 0; t < X.count(j) && tractable; ++t)
                        if (X.link(X.cell(j, t)).count(k - j - 1) > 14) tractable = false;
                if (k == 0 && X.count(0) > 14) tractable = false;
                if (!tractable) continue;
                for (int s = 0; s < r.opts().minimize_samples; ++s) {
                    const Cochain phi = detail::random_cochain(X, k, rng);
                    const Rational eps = eps_grid[s % 3];
                    const auto T = eps_local_minimize(X, phi, eps);
                    ++runs;
                    Cochain want = T.input;
                    want.xor_with(differential(X, T.psi));
                    if (!(T.corrected == want))
                        r.fail(e.name + ": corrected != input + d psi");
                    if (!is_eps_locally_minimal(X, T.corrected, eps))
                        r.fail(e.name + ": output not eps-locally minimal (k=" +
                               std::to_string(k) + ")");
                    if (norm(X, T.corrected) > norm(X, phi))
                        r.fail(e.name + ": minimize increased the norm");
                    Rational min_m;
                    bool first = true;
                    for (int j = -1; j < k; ++j)
                        for (std::size_t t = 0; t < X.count(j); ++t) {
                            if (first || X.weight(j, t) < min_m) min_m = X.weight(j, t);
                            first = false;
                        }
                    const Rational bound = norm(X, phi) / (eps * min_m);
                    if (Rational(static_cast<long>(T.steps.size())) > bound)
                        r.fail(e.name + ": step count exceeds the norm/eps bound");
                }
            }
        }
        r.note("minimize runs: " + std::to_string(runs));
    });

    // Thinness bookkeeping agrees with its definition on random cochains.
    run.check("thinness-contract", [&](detail::LemmaRunner& r) {
        std::mt19937_64 rng(r.opts().seed ^ 0x7777ull);
        const Rational delta(1, 4);
        for (const auto& e : corp) {
            const auto& X = e.X;
            for (int k = 1; k <= X.dimension(); ++k) {
                const Cochain phi = detail::random_cochain(X, k, rng);
                if (phi.is_zero()) continue;
                const auto T = thinness(X, phi, delta);
                Rational s = 0;
                std::size_t cnt = 0;
                for (std::size_t t = 0; t < X.count(k - 1); ++t) {
                    const Rational nrm = localized_norm(X, phi, X.cell(k - 1, t));
                    if (nrm <= delta * X.weight(k - 1, t)) {
                        ++cnt;
                        s += nrm;
                    }
                }
                if (cnt != T.thin_set.size() || s != T.thin_norm_sum)
                    r.fail(e.name + ": thin set mismatch at k=" + std::to_string(k));
                if (T.r_star * (k + 1) * norm(X, phi) != T.thin_norm_sum)
                    r.fail(e.name + ": r_star identity fails at k=" + std::to_string(k));
                if (is_r_delta_thin(X, phi, Rational(1, 100), delta) != (T.r_star >= Rational(1, 100)))
                    r.fail(e.name + ": is_r_delta_thin disagrees with r_star");
            }
        }
    });

    // The thin-cochain Laplacian bounds, checked on minimizer outputs (which
    // satisfy the eps-local-minimality hypothesis by construction).
    run.check("thin-laplacian", [&](detail::LemmaRunner& r) {
        std::mt19937_64 rng(r.opts().seed ^ 0x1234ull);
        int checked = 0;
        for (const auto& name :
             {"tetrahedron", "hollow-tetrahedron", "sphere-3d", "cone-c3", "suspension-c3",
              "octahedron", "glued-tetrahedra", "rp2-6", "k6-2skeleton"}) {
            const auto& X = corpus_complex(name);
            // k = 0: delta-thin cochains obey ||d phi|| >= lambda0 (1-delta)||phi||.
            for (int s = 0; s < 4; ++s) {
                const Cochain phi = detail::random_cochain(X, 0, rng);
                if (phi.is_zero()) continue;
                const Rational nrm = norm(X, phi);
                const Rational total = X.total_weight(-1);
                Rational delta = nrm / total + Rational(1, 100);
                if (delta >= Rational(1, 2)) continue;  // not thin enough to use part 1
                const auto rec = verify_thin_laplacian(X, phi, delta);
                ++checked;
                if (!rec.pass) r.fail(std::string(name) + ": part-1 bound fails");
            }
            // k >= 1: feed eps-locally-minimal cochains with their exact r_star.
            for (int k = 1; k < X.dimension(); ++k) {
                if (X.count(k) > 24) continue;
                for (int s = 0; s < 2; ++s) {
                    const Rational eps(1, 4);
                    const Cochain phi = detail::random_cochain(X, k, rng);
                    const auto T = eps_local_minimize(X, phi, eps);
                    if (T.corrected.is_zero()) continue;
                    const Rational delta(1, 4);
                    const auto th = thinness(X, T.corrected, delta);
                    if (!(th.r_star > 0)) continue;
                    const Rational rr = th.r_star > 1 ? Rational(1) : th.r_star;
                    const auto rec = verify_thin_laplacian(X, T.corrected, delta, rr, eps);
                    ++checked;
                    if (!rec.pass)
                        r.fail(std::string(name) + ": part-2 bound fails at k=" +
                               std::to_string(k));
                }
            }
        }
        r.note("bounds checked: " + std::to_string(checked));
    });

    // Pinned ledger values and their defining arithmetic.
    run.check("ledger-spot-values", [&](detail::LemmaRunner& r) {
        const auto L1 = ledger_k1();
        r.require(L1.delta == Rational(1, 16) && L1.eps1 == Rational(1, 32),
                  "k=1 ledger inputs off");
        r.require(L1.c1_prime == L1.delta * L1.delta * L1.eps1, "C1' != delta^2 eps1");
        r.require(*L1.c1 == Rational(1, 8192), "C1 != 1/8192");
        r.require(*L1.theta1 == Rational(511, 512), "theta1 != 511/512");
        r.require(L1.theta1_prime == 1 - L1.delta * L1.eps1, "theta1' != 1 - delta eps1");

        const auto L2 = ledger_k2(Rational(1, 6));
        r.require(*L2.eps2 == Rational(7, 120), "eps2 != 7/120 at eps=1/6");
        r.require(L2.delta == Rational(1, 6000), "delta != 1/6000 at eps=1/6");
        r.require(L2.eps1 == Rational(7, 7200), "eps1 != 7/7200 at eps=1/6");
        r.require(L2.c1_prime == L2.delta * L2.delta * L2.eps1, "k=2 chain C1' formula");
        r.require(*L2.c2 == *L2.c2_prime, "C2 != C2'");
        const auto LA = ledger_k2_alternative(Rational(7, 120), Rational(1, 6000));
        r.require(*LA.c2_prime == *L2.c2_prime && *LA.theta2_prime == *L2.theta2_prime,
                  "k=2 ledger does not factor through the alternative-form ledger");
    });

    // mu/nu aggregation against a direct max/min recomputation.
    run.check("mu-nu-grid", [&](detail::LemmaRunner& r) {
        const Rational eps_grid[] = {Rational(1, 16), Rational(1, 5), Rational(1)};
        const std::vector<std::vector<Rational>> cs = {
            {Rational(1), Rational(1, 8192), Rational(1, 100000)},
            {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
            {Rational(3), Rational(2), Rational(1)}};
        for (const auto& eps : eps_grid)
            for (const auto& C : cs) {
                const auto mn = mu_nu_from_isoperimetry(3, eps, C);
                Rational mu = 1 / eps, nu = C[0];
                for (int k = 0; k < 3; ++k) {
                    const Rational cand = Rational(k + 1) / C[static_cast<std::size_t>(k)];
                    if (cand > mu) mu = cand;
                    if (C[static_cast<std::size_t>(k)] < nu) nu = C[static_cast<std::size_t>(k)];
                }
                if (mn.mu != mu || mn.nu != nu) r.fail("mu/nu disagree with direct recomputation");
            }
    });

    // Skeleton weight comparison: two-sided bound on every corpus entry,
    // with the pinned equality/ratio facts on the two tetrahedron fixtures.
    run.check("skeleton-compare", [&](detail::LemmaRunner& r) {
        for (const auto& e : corp) {
            const auto& X = e.X;
            if (X.dimension() < 2) continue;
            for (int l = 1; l < X.dimension(); ++l) {
                const auto S = skeleton_compare(X, l);
                if (!S.bounds_ok)
                    r.fail(e.name + ": two-sided skeleton bound fails at l=" + std::to_string(l));
            }
        }
        const auto T = skeleton_compare(corpus_complex("tetrahedron"), 2);
        r.require(T.m1 == 1 && T.m2 == 1 && T.ratio == 1, "tetrahedron l=2 should give M=1");
        r.require(T.factor == 4, "tetrahedron l=2 factor != 4");
        const auto G = skeleton_compare(corpus_complex("glued-tetrahedra"), 2);
        r.require(G.ratio == 2, "glued tetrahedra l=2 should give M=2");
    });

    // Corrupted weight tables are rejected with the offending simplex named.
    run.check("fault-injection", [&](detail::LemmaRunner& r) {
        const auto& X = corpus_complex("glued-tetrahedra");
        const int n = X.dimension();
        std::vector<std::vector<Simplex>> cells;
        std::vector<std::vector<Rational>> weights;
        for (int k = -1; k <= n; ++k) {
            cells.push_back(X.cells(k));
            weights.push_back(X.weights(k));
        }
        WeightedComplex::validate_parts(n, cells, weights);  // sanity: intact tables pass
        const std::string victim = X.cell(1, 0).str();
        weights[2][0] *= 2;  // corrupt one edge weight
        bool caught = false;
        try {
            WeightedComplex::validate_parts(n, cells, weights);
        } catch (const ValidationError& err) {
            caught = true;
            if (std::string(err.what()).find(victim) == std::string::npos)
                r.fail("validation error does not name the corrupted simplex");
        }
        r.require(caught, "corrupted weight table was accepted");
    });

    // Generator structure facts.
    run.check("generator-structure", [&](detail::LemmaRunner& r) {
        const auto& fano = corpus_complex("fano-flag");
        r.require(fano.count(0) == 14 && fano.count(1) == 21, "Fano flag complex is not 14/21");
        const auto pg3 = projective_plane_flag(3);
        r.require(pg3.count(0) == 26 && pg3.count(1) == 52, "PG(2,3) flag complex is not 26/52");
        for (int v = 2; v <= 6; ++v) {
            const auto F = full_simplex(v);
            for (int k = -1; k < v; ++k)
                if (Integer(static_cast<long>(F.count(k))) != binomial_int(v, k + 1))
                    r.fail("full simplex cell count off");
        }
        const auto H = hollow_simplex(5);
        r.require(H.dimension() == 3 && H.count(3) == 5, "hollow simplex shape off");
        const auto lm_full = linial_meshulam(2, 5, Rational(1), 7);
        const auto sk = full_simplex(5).skeleton(2, WeightKind::Homogeneous);
        r.require(lm_full.count(2) == sk.count(2), "LM at p=1 misses cells of the full skeleton");
        const auto J = join(detail::points(3), detail::points(3));
        r.require(J.dimension() == 1 && J.count(1) == 9 && J.count(0) == 6, "join shape off");
    });

    return run.finish();
}

}  // namespace hdx
