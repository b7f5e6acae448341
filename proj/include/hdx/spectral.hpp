#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"

namespace hdx {

/// lambda[k] = min over tau in X^(k-1) of the spectral gap of the link
/// 1-skeleton, for 0 <= k <= n-1. lambda[0] is the gap of X itself
/// (tau = empty simplex).
struct SpectralProfile {
    int n = 0;
    std::vector<double> lambda;
    std::vector<std::size_t> links_checked;  // per level
};

inline double link_gap(const WeightedComplex& X, const Simplex& tau) {
    const WeightedComplex L = X.link(tau);
    const WeightedGraph G = WeightedGraph::from_complex_skeleton(L);
    if (!G.connected())
        throw DisconnectedLink("link of " + tau.str() + " is disconnected");
    return spectral_gap(G);
}

inline SpectralProfile spectral_profile(const WeightedComplex& X) {
    const int n = X.dimension();
    if (n < 1) throw BadDimension("spectral profile needs dimension >= 1");
    SpectralProfile P;
    P.n = n;
    P.lambda.assign(n, 0.0);
    P.links_checked.assign(n, 0);
    for (int k = 0; k <= n - 1; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& tau : X.cells(k - 1)) {
            best = std::min(best, link_gap(X, tau));
            ++P.links_checked[k];
        }
        P.lambda[k] = best;
    }
    return P;
}

struct DescentReport {
    // part1[k]: lambda_k >= 2 - 1/lambda_{k+1} - tol, for 0 <= k <= n-2
    std::vector<bool> part1;
    // part2 applies when lambda_{n-1} > (n-1)/n: then every lambda_k must
    // exceed k/(k+1).
    bool part2_applicable = false;
    std::vector<bool> part2;
    bool all_ok = true;
};

inline DescentReport descent_check(const SpectralProfile& P, double tol = 1e-9) {
    DescentReport R;
    const int n = P.n;
    for (int k = 0; k + 1 <= n - 1; ++k) {
        const bool ok = P.lambda[k] >= 2.0 - 1.0 / P.lambda[k + 1] - tol;
        R.part1.push_back(ok);
        R.all_ok = R.all_ok && ok;
    }
    R.part2_applicable = P.lambda[n - 1] > static_cast<double>(n - 1) / n + tol;
    if (R.part2_applicable) {
        for (int k = 0; k <= n - 1; ++k) {
            const bool ok = P.lambda[k] > static_cast<double>(k) / (k + 1) - tol;
            R.part2.push_back(ok);
            R.all_ok = R.all_ok && ok;
        }
    }
    return R;
}

/// Minimum spectral gap over links of (n-2)-cells, after checking that X and
/// every link of dimension >= 1 is connected. For n = 1 this is the gap of X.
inline double local_spectral_expansion(const WeightedComplex& X) {
    const int n = X.dimension();
    if (n < 1) throw BadDimension("local spectral expansion needs dimension >= 1");
    for (int j = -1; j <= n - 2; ++j)
        for (const auto& tau : X.cells(j)) {
            const WeightedComplex L = X.link(tau);
            if (!WeightedGraph::from_complex_skeleton(L).connected())
                throw DisconnectedLink("link of " + tau.str() + " is disconnected");
        }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& tau : X.cells(n - 2)) best = std::min(best, link_gap(X, tau));
    return best;
}

}  // namespace hdx
