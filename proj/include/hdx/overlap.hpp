#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/isoperimetry.hpp"
#include "hdx/rational.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

struct MuNu {
    Rational mu, nu;
};

/// mu = max(1/eps, 1/C_0, 2/C_1, ..., n/C_{n-1}), nu = min(C_0, ..., C_{n-1}):
/// the cofilling and systole bounds that level-wise isoperimetric inequalities
/// with constants (eps, C_k) buy.
inline MuNu mu_nu_from_isoperimetry(int n, const Rational& eps,
                                    const std::vector<Rational>& C) {
    if (n < 1) throw BadArgs("mu_nu_from_isoperimetry needs n >= 1");
    if (!(eps > 0)) throw BadArgs("eps must be positive");
    if (C.size() != static_cast<std::size_t>(n))
        throw BadArgs("need exactly n norm coefficients C_0..C_{n-1}");
    MuNu out;
    out.mu = 1 / eps;
    out.nu = C[0];
    for (int k = 0; k < n; ++k) {
        if (!(C[static_cast<std::size_t>(k)] > 0)) throw BadArgs("norm coefficients must be positive");
        const Rational cand = Rational(k + 1) / C[static_cast<std::size_t>(k)];
        if (cand > out.mu) out.mu = cand;
        if (C[static_cast<std::size_t>(k)] < out.nu) out.nu = C[static_cast<std::size_t>(k)];
    }
    return out;
}

/// One level of the overlap criterion: the cofilling constant against mu and
/// the systole against nu * m(X^(k)). An infinite systole (H^k = 0) passes
/// vacuously; cofilling constants are always finite.
struct KKLLevelCheck {
    int k = 0;
    ExtRational mu_k;
    bool mu_ok = false;
    ExtRational systole_k;
    Rational systole_floor;  // nu * m(X^(k))
    bool systole_ok = false;
};

struct KKLCheck {
    Rational mu, nu;
    std::vector<KKLLevelCheck> levels;  // k = 0..n-1
    bool all_ok = true;
};

/// Checks both overlap-criterion conditions on every level 0 <= k <= n-1.
/// The criterion reads the normalized homogeneous norm; the check itself uses
/// whatever weights X carries, so callers pin the norm by construction.
inline KKLCheck kkl_hypothesis_check(const WeightedComplex& X, const Rational& mu,
                                     const Rational& nu, const EnumOptions& opts = {}) {
    KKLCheck out;
    out.mu = mu;
    out.nu = nu;
    for (int k = 0; k < X.dimension(); ++k) {
        KKLLevelCheck lv;
        lv.k = k;
        lv.mu_k = cofilling(X, k, opts).value;
        lv.mu_ok = !lv.mu_k.infinite && lv.mu_k.value <= mu;
        lv.systole_k = systole(X, k, opts).value;
        lv.systole_floor = nu * X.total_weight(k);
        lv.systole_ok = lv.systole_k.infinite || lv.systole_k.value >= lv.systole_floor;
        out.all_ok = out.all_ok && lv.mu_ok && lv.systole_ok;
        out.levels.push_back(std::move(lv));
    }
    return out;
}

/// Comparison between the ambient normalized homogeneous weight and the one
/// the l-skeleton would carry on its own: with M1/M2 the extreme counts of
/// top cofacets over X^(l), M = M2/M1, and factor = (n-l)! C(n+1, l+1),
///   (factor / M) m_{h,l}(sigma) <= m_h(sigma) <= factor M m_{h,l}(sigma)
/// for every sigma in X^(l), verified exactly.
struct SkeletonCompare {
    int l = 0;
    std::int64_t m1 = 0, m2 = 0;
    Rational ratio;         // M = M2 / M1
    Rational factor;        // (n-l)! * C(n+1, l+1)
    Rational lower_factor;  // factor / M
    Rational upper_factor;  // factor * M
    bool bounds_ok = false;
};

inline SkeletonCompare skeleton_compare(const WeightedComplex& X, int l) {
    const int n = X.dimension();
    if (l <= 0 || l >= n) throw BadDimension("skeleton_compare needs 0 < l < n");
    SkeletonCompare out;
    out.l = l;
    const auto counts = X.top_cofacet_counts(l);
    out.m1 = *std::min_element(counts.begin(), counts.end());
    out.m2 = *std::max_element(counts.begin(), counts.end());
    out.ratio = Rational(out.m2, out.m1);
    out.factor = Rational(Integer(factorial_u64(n - l)) *
                          binomial_int(n + 1, l + 1));
    out.lower_factor = out.factor / out.ratio;
    out.upper_factor = out.factor * out.ratio;

    // m_h(sigma) = (n-l)! count(sigma) / |X^(n)| against m_{h,l}(sigma) = 1 / |X^(l)|
    const Integer ntop(X.count(n));
    const Integer nl(X.count(l));
    out.bounds_ok = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const Rational mh = Rational(Integer(factorial_u64(n - l)) *
                                         Integer(counts[i]),
                                     ntop);
        const Rational mhl = Rational(Integer(1), nl);
        if (!(out.lower_factor * mhl <= mh && mh <= out.upper_factor * mhl))
            out.bounds_ok = false;
    }
    return out;
}

/// Hypothesis certificate for the 2-skeleton overlap statement. Asserts only
/// that the hypotheses hold; no numeric overlap constant is invented, since
/// the criterion supplies c(n, mu, nu) without a formula.
struct OverlapCertificate {
    int n = 0;

    // condition 1: lambda-local spectral expansion against Lambda_2
    double lambda_local = 0;
    double lambda_threshold = 0;  // +inf when the derived threshold degenerates
    bool spectral_ok = false;

    // condition 2: per-vertex 1-coboundary expansion of links
    std::vector<ExtRational> link_eps1;  // indexed like X.cells(0)
    ExtRational link_floor;
    Rational epsilon_used;  // the k=2 chain input actually fed downstream
    bool epsilon_overridden = false;
    bool links_ok = false;

    // condition 3 data: the level-2 count ratio (any finite ratio qualifies)
    SkeletonCompare skeleton;

    // derived chain: constants, mu/nu on X, converted bounds on the 2-skeleton
    Rational eps_min;         // single local-minimality parameter serving k = 0..2
    std::vector<Rational> C;  // C_0..C_2
    Rational mu, nu;          // from mu_nu_from_isoperimetry(3, eps_min, C)
    Rational mu_prime;        // M^2 mu
    Rational nu_prime;        // nu / M
    KKLCheck kkl;             // on the 2-skeleton with its own normalized weights

    bool verdict = false;  // hypotheses-satisfied: every component check passed
};

/// Runs the full 2-skeleton pipeline: local spectral expansion, per-link
/// 1-coboundary expansion floor, the exact constant chain at the chosen
/// epsilon, mu/nu, the level-2 weight comparison, and the overlap-criterion
/// checks on the 2-skeleton with converted bounds M^2 mu and nu / M.
///
/// The spectral threshold Lambda_2 is derived by pushing
/// theta = max(theta_1, theta_2) through the link-descent recursion: lambda_k
/// at distance j below the top obeys 1 - a_j with a_j = a_0 / (1 - j a_0), so
/// lambda >= 1 - s / (1 + (n-1) s) with s = 1 - theta forces every
/// lambda_k >= theta down to k = 0. Since theta_2 > 1 as derived, s < 0 and
/// the threshold lands above 1; it is reported as computed (or +inf when the
/// recursion denominator degenerates). Normalized gaps reach 2, so dense
/// links can clear even such a threshold and the comparison stays meaningful.
inline OverlapCertificate certify_2skeleton(const WeightedComplex& X,
                                            std::optional<Rational> eps_override = {},
                                            const EnumOptions& opts = {}, double tol = 1e-9) {
    const int n = X.dimension();
    if (n <= 2) throw BadDimension("certify_2skeleton needs dimension > 2");

    OverlapCertificate cert;
    cert.n = n;

    // condition 1 value (also validates link connectivity at every level)
    cert.lambda_local = local_spectral_expansion(X);

    // condition 2: floor over vertices of eps_1(link)
    cert.link_floor = ExtRational::inf();
    for (std::size_t vi = 0; vi < X.count(0); ++vi) {
        const WeightedComplex L = X.link(X.cell(0, vi));
        ExtRational e1 = coboundary_expansion(L, 1, SearchMode::Quotient, opts).value;
        if (e1 < cert.link_floor) cert.link_floor = e1;
        cert.link_eps1.push_back(std::move(e1));
    }

    if (eps_override) {
        cert.epsilon_used = *eps_override;
        cert.epsilon_overridden = true;
        cert.links_ok = cert.link_floor.infinite ||
                        cert.link_floor.value >= cert.epsilon_used;
    } else if (cert.link_floor.infinite) {
        // no link offers a non-coboundary 1-cochain: condition 2 is vacuous
        cert.epsilon_used = 1;
        cert.links_ok = true;
    } else if (cert.link_floor.value > 0) {
        cert.epsilon_used = cert.link_floor.value < 1 ? cert.link_floor.value : Rational(1);
        cert.links_ok = true;
    } else {
        // a link with expansion 0 defeats condition 2 for every positive
        // epsilon; keep a nominal chain input so the report stays complete
        cert.epsilon_used = 1;
        cert.links_ok = false;
    }

    // exact constant chains and the single minimality parameter they share
    const ConstantsLedger L1 = ledger_k1();
    const ConstantsLedger L2 = ledger_k2(cert.epsilon_used);
    cert.eps_min = std::min({*L1.eps, *L2.eps});
    cert.C = {Rational(1), *L1.c1, *L2.c2};

    const Rational theta = *L1.theta1 > *L2.theta2 ? *L1.theta1 : *L2.theta2;
    const Rational s = 1 - theta;
    const Rational denom = 1 + s * (n - 1);
    if (denom > 0) cert.lambda_threshold = to_double(1 - s / denom);
    else cert.lambda_threshold = std::numeric_limits<double>::infinity();
    cert.spectral_ok = cert.lambda_local >= cert.lambda_threshold - tol;

    const MuNu mn = mu_nu_from_isoperimetry(3, cert.eps_min, cert.C);
    cert.mu = mn.mu;
    cert.nu = mn.nu;

    cert.skeleton = skeleton_compare(X, 2);
    cert.mu_prime = cert.mu * cert.skeleton.ratio * cert.skeleton.ratio;
    cert.nu_prime = cert.nu / cert.skeleton.ratio;

    const WeightedComplex X2 = X.skeleton(2, WeightKind::NormalizedHomogeneous);
    cert.kkl = kkl_hypothesis_check(X2, cert.mu_prime, cert.nu_prime, opts);

    cert.verdict =
        cert.spectral_ok && cert.links_ok && cert.skeleton.bounds_ok && cert.kkl.all_ok;
    return cert;
}

}  // namespace hdx
