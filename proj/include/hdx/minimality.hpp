#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/gf2.hpp"

namespace hdx {

namespace detail {

/// Link workspaces keyed by (j, cell index): the link complex and the
/// coboundary basis of the dimension the minimality definitions quantify
/// over. Built lazily; reused across minimization steps since only the
/// cochain changes, never the complex.
class LinkCache {
public:
    explicit LinkCache(const WeightedComplex& X) : X_(X) {}

    struct Ctx {
        WeightedComplex link;
        SubspaceBasis B;  // B^{k-j-1}(link), with preimages
    };

    const Ctx& at(int j, std::size_t tau_idx, int k) {
        const auto key = std::make_pair(j, tau_idx);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const Simplex& tau = X_.cell(j, tau_idx);
        WeightedComplex L = X_.link(tau);
        SubspaceBasis B = subspace_basis(L, k - j - 1, SubspaceKind::Coboundaries);
        auto [pos, _] = cache_.emplace(key, Ctx{std::move(L), std::move(B)});
        return pos->second;
    }

private:
    const WeightedComplex& X_;
    std::map<std::pair<int, std::size_t>, Ctx> cache_;
};

}  // namespace detail

/// ||phi|| <= ||phi - psi|| for every psi in B^k, checked exhaustively.
inline bool is_minimal(const WeightedComplex& X, const Cochain& phi,
                       const EnumOptions& opts = {}) {
    check_host(X, phi, "is_minimal");
    const auto B = subspace_basis(X, phi.k(), SubspaceKind::Coboundaries);
    return coset_min_norm(X, phi, B, opts).value == norm(X, phi);
}

/// Every vertex localization phi_v is minimal in the link X_v. For k = 0 the
/// definition falls back to plain minimality.
inline bool is_locally_minimal(const WeightedComplex& X, const Cochain& phi,
                               const EnumOptions& opts = {}) {
    check_host(X, phi, "is_locally_minimal");
    const int k = phi.k();
    if (k < 0) throw BadDimensions("local minimality needs k >= 0");
    if (k == 0) return is_minimal(X, phi, opts);
    for (std::size_t vi = 0; vi < X.count(0); ++vi) {
        const Simplex& v = X.cell(0, vi);
        const WeightedComplex L = X.link(v);
        const Cochain phi_v = localize(X, phi, v, L);
        const auto B = subspace_basis(L, k - 1, SubspaceKind::Coboundaries);
        if (coset_min_norm(L, phi_v, B, opts).value != norm(L, phi_v)) return false;
    }
    return true;
}

namespace detail {

/// k >= 1 body of the eps-local-minimality test against a caller-owned link
/// cache, so scans over many cochains pay for link construction once.
inline bool eps_locally_minimal_with(const WeightedComplex& X, const Cochain& phi,
                                     const Rational& eps, LinkCache& links,
                                     const EnumOptions& opts) {
    const int k = phi.k();
    for (int j = 0; j <= k - 1; ++j) {
        for (std::size_t ti = 0; ti < X.count(j); ++ti) {
            const auto& ctx = links.at(j, ti, k);
            const Cochain phi_tau = localize(X, phi, X.cell(j, ti), ctx.link);
            const Rational nrm = norm(ctx.link, phi_tau);
            const Rational cm = coset_min_norm(ctx.link, phi_tau, ctx.B, opts).value;
            if (nrm > cm + eps * X.weight(j, ti)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// For k >= 1: for every j <= k-1 and tau in X^(j), ||phi_tau|| exceeds the
/// B^{k-j-1}(X_tau) coset minimum by at most eps * m(tau). For k = 0:
/// ||phi|| <= (1+eps) m(X^(0)) / 2. Exact arithmetic; eps = 0 is meaningful
/// here (it recovers a strict minimality notion), only the minimizer rejects it.
inline bool is_eps_locally_minimal(const WeightedComplex& X, const Cochain& phi,
                                   const Rational& eps, const EnumOptions& opts = {}) {
    check_host(X, phi, "is_eps_locally_minimal");
    if (eps < 0) throw BadArgs("eps must be nonnegative");
    const int k = phi.k();
    if (k < 0) throw BadDimensions("eps-local minimality needs k >= 0");
    if (k == 0) return norm(X, phi) <= (1 + eps) * X.total_weight(0) / 2;
    detail::LinkCache links(X);
    return detail::eps_locally_minimal_with(X, phi, eps, links, opts);
}

struct MinimizationStep {
    int j;                   // dimension of the violating tau (-1 for k = 0)
    Simplex tau;
    Cochain link_correction;  // psi' in C^{k-j-2}(X_tau) with d psi' = the
                              // subtracted coboundary
};

struct MinimizationTrace {
    Cochain input;
    Cochain psi;        // accumulated correction in C^{k-1}
    Cochain corrected;  // input - d psi
    std::vector<MinimizationStep> steps;
    Rational eps;
};

/// The constructive procedure behind the eps-local-minimality lemma: find the
/// first violating (j, tau) in scan order (j ascending, tau canonical), apply
/// the cheapest link correction extended by zero outside the star of tau,
/// repeat. Each step lowers ||phi|| by more than eps * m(tau), which bounds
/// the step count by ||phi|| / (eps * min_tau m(tau)) and forces termination.
inline MinimizationTrace eps_local_minimize(const WeightedComplex& X, const Cochain& phi0,
                                            const Rational& eps, const EnumOptions& opts = {}) {
    check_host(X, phi0, "eps_local_minimize");
    if (eps <= 0) throw BadEpsilon("eps must be positive, got " + format_rational(eps));
    const int k = phi0.k();
    if (k < 0) throw BadDimensions("eps_local_minimize needs k >= 0");

    MinimizationTrace trace;
    trace.input = phi0;
    trace.eps = eps;
    trace.psi = Cochain::zero(X, k - 1);
    Cochain phi = phi0;

    if (k == 0) {
        // At most one step: complementing once lands under the threshold.
        if (norm(X, phi) > (1 + eps) * X.total_weight(0) / 2) {
            Cochain one_empty = Cochain::zero(X, -1);
            one_empty.set(0, true);
            phi.xor_with(differential(X, one_empty));
            trace.psi.xor_with(one_empty);
            trace.steps.push_back({-1, Simplex{}, one_empty});
        }
        trace.corrected = phi;
        return trace;
    }

    detail::LinkCache links(X);
    for (;;) {
        bool violated = false;
        for (int j = 0; j <= k - 1 && !violated; ++j) {
            for (std::size_t ti = 0; ti < X.count(j) && !violated; ++ti) {
                const auto& ctx = links.at(j, ti, k);
                const Simplex& tau = X.cell(j, ti);
                const Cochain phi_tau = localize(X, phi, tau, ctx.link);
                const Rational nrm = norm(ctx.link, phi_tau);
                const CosetMin cm = coset_min_norm(ctx.link, phi_tau, ctx.B, opts);
                if (nrm <= cm.value + eps * X.weight(j, ti)) continue;

                violated = true;
                Cochain b = phi_tau;
                b.xor_with(cm.witness);  // the subtracted element of B^{k-j-1}(link)
                Cochain zero_pre(k - j - 2, ctx.link.count(k - j - 2), ctx.link.hash());
                auto [residue, psi_link] = ctx.B.reduce_with_preimage(b, zero_pre);
                if (!residue.is_zero())
                    throw Error("internal: correction not in coboundary span");

                // extend by zero outside the star of tau
                Cochain psi_step = Cochain::zero(X, k - 1);
                const auto& link_cells = ctx.link.cells(k - j - 2);
                psi_link.for_each_set([&](std::size_t si) {
                    const auto idx = X.index_of(tau.union_with(link_cells[si]));
                    psi_step.set(*idx, true);
                });
                phi.xor_with(differential(X, psi_step));
                trace.psi.xor_with(psi_step);
                trace.steps.push_back({j, tau, psi_link});
            }
        }
        if (!violated) break;
    }
    trace.corrected = phi;
    return trace;
}

struct ThinnessReport {
    Rational delta;
    std::vector<std::size_t> thin_set;  // indices into X^(k-1)
    Rational thin_norm_sum;             // sum of ||phi_tau|| over A_delta
    Rational r_star;                    // thin_norm_sum / ((k+1) ||phi||)
};

/// A_delta and the thin mass fraction r_star; phi is (r, delta)-thin exactly
/// when r_star >= r.
inline ThinnessReport thinness(const WeightedComplex& X, const Cochain& phi,
                               const Rational& delta) {
    check_host(X, phi, "thinness");
    const int k = phi.k();
    if (k < 1) throw BadDimensions("thinness needs k >= 1");
    if (phi.is_zero()) throw ZeroCochain("r_star undefined for the zero cochain");
    if (delta < 0) throw BadArgs("delta must be nonnegative");
    ThinnessReport R;
    R.delta = delta;
    R.thin_norm_sum = 0;
    for (std::size_t ti = 0; ti < X.count(k - 1); ++ti) {
        const Rational nrm = localized_norm(X, phi, X.cell(k - 1, ti));
        if (nrm <= delta * X.weight(k - 1, ti)) {
            R.thin_set.push_back(ti);
            R.thin_norm_sum += nrm;
        }
    }
    R.r_star = R.thin_norm_sum / ((k + 1) * norm(X, phi));
    return R;
}

inline bool is_r_delta_thin(const WeightedComplex& X, const Cochain& phi, const Rational& r,
                            const Rational& delta) {
    return thinness(X, phi, delta).r_star >= r;
}

}  // namespace hdx
