#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/gf2.hpp"
#include "hdx/parallel.hpp"
#include "hdx/rational.hpp"

namespace hdx {

struct EnumOptions {
    std::uint64_t cap = 1ull << 26;  // max states per enumeration
    int threads = 1;
};

enum class SearchMode { Exhaustive, Quotient };

namespace detail {

inline void require_states(std::uint64_t dim_bits, std::uint64_t cap, const char* what) {
    if (dim_bits >= 63 || (1ull << dim_bits) > cap)
        throw CapExceeded(std::string(what) + ": 2^" + std::to_string(dim_bits) +
                          " states exceed cap " + std::to_string(cap));
}

/// Gray-code state at index i: XOR of generators named by the bits of
/// i ^ (i >> 1). Consecutive indices differ in generator ctz(i).
inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

/// Flip `g` into `cur`, updating the norm one bit at a time.
inline void apply_flip(Cochain& cur, Rational& nrm, const Cochain& g,
                       const std::vector<Rational>& w) {
    g.for_each_set([&](std::size_t b) {
        if (cur.get(b)) nrm -= w[b];
        else nrm += w[b];
        cur.flip(b);
    });
}

/// Running optimum of a ratio num/den (den > 0) with lex-least witness.
struct RatioBest {
    bool has = false;
    Rational num, den;
    Cochain witness;

    bool offer_min(const Rational& n2, const Rational& d2, const Cochain& w2) {
        if (!has || n2 * den < num * d2 ||
            (n2 * den == num * d2 && Cochain::lex_less(w2, witness))) {
            has = true;
            num = n2;
            den = d2;
            witness = w2;
            return true;
        }
        return false;
    }
    bool offer_max(const Rational& n2, const Rational& d2, const Cochain& w2) {
        if (!has || n2 * den > num * d2 ||
            (n2 * den == num * d2 && Cochain::lex_less(w2, witness))) {
            has = true;
            num = n2;
            den = d2;
            witness = w2;
            return true;
        }
        return false;
    }
};

}  // namespace detail

struct CosetMin {
    Rational value;
    Cochain witness;  // the coset element attaining the minimum
};

/// Exact minimum of ||phi + span(S)|| with a lexicographically-least witness.
/// Walks the span in Gray order with incremental norm updates; with several
/// threads the index space is cut into blocks whose partial results merge in
/// block order, so the answer is identical for any thread count.
inline CosetMin coset_min_norm(const WeightedComplex& X, const Cochain& phi,
                               const SubspaceBasis& S, const EnumOptions& opts = {}) {
    check_host(X, phi, "coset_min_norm");
    if (S.k != phi.k()) throw BadDimensions("coset_min_norm: subspace/cochain dim mismatch");
    const std::size_t d = S.dim();
    detail::require_states(d, opts.cap, "coset_min_norm");
    const auto& w = X.weights(phi.k());
    const std::uint64_t total = 1ull << d;

    auto state_at = [&](std::uint64_t idx) {
        Cochain c = phi;
        std::uint64_t mask = detail::gray(idx);
        while (mask) {
            const int g = std::countr_zero(mask);
            c.xor_with(S.basis[static_cast<std::size_t>(g)]);
            mask &= mask - 1;
        }
        return c;
    };

    const auto blocks = split_blocks(total, opts.threads);
    std::vector<CosetMin> part(blocks.size());
    run_blocks(blocks.size(), opts.threads, [&](std::size_t bi) {
        const auto [from, to] = blocks[bi];
        Cochain cur = state_at(from);
        Rational nrm = norm(X, cur);
        CosetMin best{nrm, cur};
        for (std::uint64_t i = from + 1; i < to; ++i) {
            const int g = std::countr_zero(i);
            detail::apply_flip(cur, nrm, S.basis[static_cast<std::size_t>(g)], w);
            if (nrm < best.value ||
                (nrm == best.value && Cochain::lex_less(cur, best.witness))) {
                best.value = nrm;
                best.witness = cur;
            }
        }
        part[bi] = std::move(best);
    });
    CosetMin best = std::move(part[0]);
    for (std::size_t bi = 1; bi < part.size(); ++bi) {
        if (part[bi].value < best.value ||
            (part[bi].value == best.value && Cochain::lex_less(part[bi].witness, best.witness)))
            best = std::move(part[bi]);
    }
    return best;
}

/// Result of one expansion-constant search. `value` is the optimal ratio, or
/// +inf when the search domain is empty (and 0 for the cofilling of a trivial
/// B^{k+1}); `witness` is the optimal cochain, lex-least within the searched
/// representative set.
struct SearchOutcome {
    ExtRational value;
    std::optional<Cochain> witness;
    std::optional<Cochain> witness_aux;  // cofilling: the cheapest preimage
    std::uint64_t searched = 0;
    SearchMode mode = SearchMode::Exhaustive;
};

namespace detail {

/// Shared engine for epsilon_k (S = B^k) and epsilon-tilde_k (S = Z^k):
/// minimizes ||d phi|| / dist(phi, S) over phi not in S.
///
/// Exhaustive mode walks all of C^k; quotient mode walks one representative
/// per coset of S, namely the vectors supported on the non-pivot cells of
/// S's RREF basis. Both ||d phi|| and dist(phi, S) are functions of the coset
/// (S is contained in Z^k, so d is constant on cosets), hence the optimal
/// value is mode-independent; only the reported witness may differ.
inline SearchOutcome expansion_search(const WeightedComplex& X, int k, const SubspaceBasis& S,
                                      SearchMode mode, const EnumOptions& opts) {
    const std::size_t nc = X.count(k);
    std::vector<std::size_t> free_cells;
    if (mode == SearchMode::Quotient) {
        std::vector<char> is_pivot(nc, 0);
        for (std::size_t p : S.pivots) is_pivot[p] = 1;
        for (std::size_t i = 0; i < nc; ++i)
            if (!is_pivot[i]) free_cells.push_back(i);
    } else {
        for (std::size_t i = 0; i < nc; ++i) free_cells.push_back(i);
    }
    const std::size_t d_out = free_cells.size();
    require_states(d_out, opts.cap, "expansion outer enumeration");
    require_states(S.dim(), opts.cap, "expansion inner coset");

    const auto& w_up = X.weights(k + 1);
    const std::uint64_t total = 1ull << d_out;

    const auto blocks = split_blocks(total, opts.threads);
    struct Part {
        RatioBest best;
        std::uint64_t searched = 0;
    };
    std::vector<Part> parts(blocks.size());

    run_blocks(blocks.size(), opts.threads, [&](std::size_t bi) {
        const auto [from, to] = blocks[bi];
        Part part;

        Cochain cur = Cochain::zero(X, k);
        {
            std::uint64_t mask = gray(from);
            while (mask) {
                const int g = std::countr_zero(mask);
                cur.flip(free_cells[static_cast<std::size_t>(g)]);
                mask &= mask - 1;
            }
        }
        Cochain dcur = differential(X, cur);
        Rational dnrm = norm(X, dcur);

        auto consider = [&](const Cochain& phi) {
            if (phi.is_zero() || S.contains(phi)) return;
            ++part.searched;
            const CosetMin dist = coset_min_norm(X, phi, S, EnumOptions{opts.cap, 1});
            part.best.offer_min(dnrm, dist.value, phi);
        };

        consider(cur);
        for (std::uint64_t i = from + 1; i < to; ++i) {
            const std::size_t cell = free_cells[static_cast<std::size_t>(std::countr_zero(i))];
            // flipping one k-cell toggles d phi on each cofacet of that cell
            for (int c : X.cofacets_of(k, cell)) {
                const auto ci = static_cast<std::size_t>(c);
                if (dcur.get(ci)) dnrm -= w_up[ci];
                else dnrm += w_up[ci];
                dcur.flip(ci);
            }
            cur.flip(cell);
            consider(cur);
        }
        parts[bi] = std::move(part);
    });

    SearchOutcome out;
    out.mode = mode;
    out.value = ExtRational::inf();
    detail::RatioBest best;
    for (auto& p : parts) {
        out.searched += p.searched;
        if (p.best.has) best.offer_min(p.best.num, p.best.den, p.best.witness);
    }
    if (best.has) {
        out.value = ExtRational::of(best.num / best.den);
        out.witness = best.witness;
    }
    return out;
}

inline void check_expansion_k(const WeightedComplex& X, int k) {
    if (k < -1 || k > X.dimension() - 1)
        throw BadK("expansion index k = " + std::to_string(k) + " for dimension " +
                   std::to_string(X.dimension()));
}

}  // namespace detail

/// epsilon_k: min over phi outside B^k of ||d phi|| / dist(phi, B^k).
inline SearchOutcome coboundary_expansion(const WeightedComplex& X, int k,
                                          SearchMode mode = SearchMode::Quotient,
                                          const EnumOptions& opts = {}) {
    detail::check_expansion_k(X, k);
    const auto B = subspace_basis(X, k, SubspaceKind::Coboundaries);
    return detail::expansion_search(X, k, B, mode, opts);
}

/// epsilon-tilde_k: same with Z^k as the reference subspace.
inline SearchOutcome cocycle_expansion(const WeightedComplex& X, int k,
                                       SearchMode mode = SearchMode::Quotient,
                                       const EnumOptions& opts = {}) {
    detail::check_expansion_k(X, k);
    const auto Z = subspace_basis(X, k, SubspaceKind::Cocycles);
    return detail::expansion_search(X, k, Z, mode, opts);
}

/// mu_k: max over nonzero phi in B^{k+1} of (cheapest preimage norm)/||phi||.
/// Computed directly from preimage-tracked elimination plus a Z^k coset
/// search; the identity mu_k = 1/epsilon-tilde_k is left to callers as a
/// cross-check, not assumed here. By convention mu_k = 0 when B^{k+1} = {0}
/// (maximum over an empty set of nonnegative ratios).
inline SearchOutcome cofilling(const WeightedComplex& X, int k, const EnumOptions& opts = {}) {
    detail::check_expansion_k(X, k);
    const auto B1 = subspace_basis(X, k + 1, SubspaceKind::Coboundaries);
    const auto Z = subspace_basis(X, k, SubspaceKind::Cocycles);
    SearchOutcome out;
    out.searched = 0;
    if (B1.dim() == 0) {
        out.value = ExtRational::of(Rational(0));
        return out;
    }
    detail::require_states(B1.dim(), opts.cap, "cofilling outer enumeration");
    detail::require_states(Z.dim(), opts.cap, "cofilling inner coset");
    const auto& w_up = X.weights(k + 1);
    const std::uint64_t total = 1ull << B1.dim();

    const auto blocks = split_blocks(total, opts.threads);
    struct Part {
        detail::RatioBest best;
        Cochain best_pre;
        std::uint64_t searched = 0;
    };
    std::vector<Part> parts(blocks.size());

    run_blocks(blocks.size(), opts.threads, [&](std::size_t bi) {
        const auto [from, to] = blocks[bi];
        Part part;
        Cochain phi = Cochain::zero(X, k + 1);
        Cochain pre = Cochain::zero(X, k);  // d(pre) == phi throughout
        {
            std::uint64_t mask = detail::gray(from);
            while (mask) {
                const int g = std::countr_zero(mask);
                phi.xor_with(B1.basis[static_cast<std::size_t>(g)]);
                pre.xor_with(B1.preimages[static_cast<std::size_t>(g)]);
                mask &= mask - 1;
            }
        }
        Rational pnrm = norm(X, phi);

        auto consider = [&]() {
            if (phi.is_zero()) return;
            ++part.searched;
            const CosetMin cheapest = coset_min_norm(X, pre, Z, EnumOptions{opts.cap, 1});
            if (part.best.offer_max(cheapest.value, pnrm, phi)) part.best_pre = cheapest.witness;
        };

        consider();
        for (std::uint64_t i = from + 1; i < to; ++i) {
            const auto g = static_cast<std::size_t>(std::countr_zero(i));
            detail::apply_flip(phi, pnrm, B1.basis[g], w_up);
            pre.xor_with(B1.preimages[g]);
            consider();
        }
        parts[bi] = std::move(part);
    });

    detail::RatioBest best;
    Cochain best_pre;
    for (auto& p : parts) {
        out.searched += p.searched;
        if (p.best.has && best.offer_max(p.best.num, p.best.den, p.best.witness))
            best_pre = p.best_pre;
    }
    out.value = ExtRational::of(best.num / best.den);
    out.witness = best.witness;
    out.witness_aux = best_pre;
    return out;
}

/// systole_k: min norm over Z^k \ B^k; +inf when H^k = 0.
inline SearchOutcome systole(const WeightedComplex& X, int k, const EnumOptions& opts = {}) {
    const int n = X.dimension();
    if (k < -1 || k > n) throw BadK("systole index k = " + std::to_string(k));
    const auto Z = subspace_basis(X, k, SubspaceKind::Cocycles);
    const auto B = subspace_basis(X, k, SubspaceKind::Coboundaries);
    SearchOutcome out;
    if (Z.dim() == B.dim()) {
        out.value = ExtRational::inf();
        return out;
    }
    detail::require_states(Z.dim(), opts.cap, "systole enumeration");
    const auto& w = X.weights(k);
    const std::uint64_t total = 1ull << Z.dim();

    const auto blocks = split_blocks(total, opts.threads);
    struct Part {
        bool has = false;
        Rational best;
        Cochain witness;
        std::uint64_t searched = 0;
    };
    std::vector<Part> parts(blocks.size());
    run_blocks(blocks.size(), opts.threads, [&](std::size_t bi) {
        const auto [from, to] = blocks[bi];
        Part part;
        Cochain cur = Cochain::zero(X, k);
        {
            std::uint64_t mask = detail::gray(from);
            while (mask) {
                const int g = std::countr_zero(mask);
                cur.xor_with(Z.basis[static_cast<std::size_t>(g)]);
                mask &= mask - 1;
            }
        }
        Rational nrm = norm(X, cur);
        auto consider = [&]() {
            if (B.contains(cur)) return;
            ++part.searched;
            if (!part.has || nrm < part.best ||
                (nrm == part.best && Cochain::lex_less(cur, part.witness))) {
                part.has = true;
                part.best = nrm;
                part.witness = cur;
            }
        };
        consider();
        for (std::uint64_t i = from + 1; i < to; ++i) {
            const auto g = static_cast<std::size_t>(std::countr_zero(i));
            detail::apply_flip(cur, nrm, Z.basis[g], w);
            consider();
        }
        parts[bi] = std::move(part);
    });
    bool has = false;
    Rational best;
    Cochain witness;
    for (auto& p : parts) {
        out.searched += p.searched;
        if (!p.has) continue;
        if (!has || p.best < best || (p.best == best && Cochain::lex_less(p.witness, witness))) {
            has = true;
            best = p.best;
            witness = p.witness;
        }
    }
    out.value = has ? ExtRational::of(best) : ExtRational::inf();
    if (has) out.witness = witness;
    return out;
}

/// Spherical-building lower bound 1 / (C(n+1, k+2)^2 * |W|).
inline Rational lmm_bound(int n, int k, long long weyl_order) {
    if (k < 0 || k > n - 1 || weyl_order < 1) throw BadArgs("lmm_bound: bad (n, k, |W|)");
    const Integer c = binomial_int(n + 1, k + 2);
    return Rational(1) / Rational(c * c * Integer(weyl_order));
}

/// Every expansion quantity for k = -1 .. n-1 in one record.
struct ExpansionReport {
    struct PerK {
        int k;
        SearchOutcome eps;        // coboundary expansion
        SearchOutcome eps_tilde;  // cocycle expansion
        SearchOutcome mu;         // cofilling
        SearchOutcome sys;        // systole
    };
    std::vector<PerK> rows;
};

inline ExpansionReport expansion_report(const WeightedComplex& X,
                                        SearchMode mode = SearchMode::Quotient,
                                        const EnumOptions& opts = {}) {
    ExpansionReport R;
    for (int k = -1; k <= X.dimension() - 1; ++k) {
        ExpansionReport::PerK row{k,
                                  coboundary_expansion(X, k, mode, opts),
                                  cocycle_expansion(X, k, mode, opts),
                                  cofilling(X, k, opts),
                                  systole(X, k, opts)};
        R.rows.push_back(std::move(row));
    }
    return R;
}

}  // namespace hdx
