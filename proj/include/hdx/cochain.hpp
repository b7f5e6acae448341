#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/errors.hpp"
#include "hdx/rational.hpp"

namespace hdx {

/// An F2 cochain on the k-cells of a fixed complex, packed 64 bits per word.
/// Bit i is the coefficient of the i-th k-cell in canonical order. The host
/// hash ties a cochain to the complex it was built on; mixing hosts is a
/// logic error the checked entry points reject.
class Cochain {
public:
    Cochain() = default;

    Cochain(int k, std::size_t ncells, std::uint64_t host)
        : k_(k), size_(ncells), host_(host), w_((ncells + 63) / 64, 0) {}

    static Cochain zero(const WeightedComplex& X, int k) {
        return Cochain(k, X.count(k), X.hash());
    }

    int k() const { return k_; }
    std::size_t size() const { return size_; }
    std::uint64_t host() const { return host_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        const std::uint64_t mask = 1ull << (i & 63);
        if (b) w_[i >> 6] |= mask;
        else w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= 1ull << (i & 63); }

    void xor_with(const Cochain& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    bool is_zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                const int b = std::countr_zero(x);
                f(static_cast<std::size_t>(wi * 64 + b));
                x &= x - 1;
            }
        }
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.k_ == b.k_ && a.size_ == b.size_ && a.w_ == b.w_;
    }

    /// Lexicographic order on the bit sequence: at the first cell index where
    /// the cochains differ, the one with coefficient 0 is smaller. Used to
    /// pick deterministic witnesses.
    static bool lex_less(const Cochain& a, const Cochain& b) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            const std::uint64_t x = a.w_[i] ^ b.w_[i];
            if (x) {
                const int bit = std::countr_zero(x);
                return ((a.w_[i] >> bit) & 1u) == 0;
            }
        }
        return false;
    }

    /// Hex form, low cell indices first (each byte printed high nibble first).
    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        const std::size_t nbytes = (size_ + 7) / 8;
        out.reserve(nbytes * 2);
        for (std::size_t b = 0; b < nbytes; ++b) {
            const std::uint64_t byte = (w_[b >> 3] >> ((b & 7) * 8)) & 0xff;
            out += digits[byte >> 4];
            out += digits[byte & 0xf];
        }
        return out;
    }

    static Cochain from_hex(int k, std::size_t ncells, std::uint64_t host,
                            const std::string& hex) {
        Cochain c(k, ncells, host);
        const std::size_t nbytes = (ncells + 7) / 8;
        if (hex.size() != nbytes * 2) throw ParseError("cochain hex length mismatch");
        auto nib = [](char ch) -> std::uint64_t {
            if (ch >= '0' && ch <= '9') return static_cast<std::uint64_t>(ch - '0');
            if (ch >= 'a' && ch <= 'f') return static_cast<std::uint64_t>(ch - 'a' + 10);
            if (ch >= 'A' && ch <= 'F') return static_cast<std::uint64_t>(ch - 'A' + 10);
            throw ParseError("bad hex digit in cochain");
        };
        for (std::size_t b = 0; b < nbytes; ++b) {
            const std::uint64_t byte = (nib(hex[2 * b]) << 4) | nib(hex[2 * b + 1]);
            c.w_[b >> 3] |= byte << ((b & 7) * 8);
        }
        if (ncells % 8 != 0 && c.w_.size()) {
            // bits past size_ must be zero
            const std::size_t top = ncells;
            for (std::size_t i = top; i < nbytes * 8; ++i)
                if (c.get(i)) throw ParseError("cochain hex sets bits past the cell count");
        }
        return c;
    }

private:
    int k_ = 0;
    std::size_t size_ = 0;
    std::uint64_t host_ = 0;
    std::vector<std::uint64_t> w_;
};

inline void check_host(const WeightedComplex& X, const Cochain& phi, const char* where) {
    if (phi.host() != X.hash())
        throw BadArgs(std::string(where) + ": cochain belongs to a different complex");
    if (phi.k() < -1 || phi.k() > X.dimension() || phi.size() != X.count(phi.k()))
        throw BadDimensions(std::string(where) + ": cochain shape mismatch");
}

/// ||phi|| = total weight of the support.
inline Rational norm(const WeightedComplex& X, const Cochain& phi) {
    check_host(X, phi, "norm");
    Rational s = 0;
    const auto& w = X.weights(phi.k());
    phi.for_each_set([&](std::size_t i) { s += w[i]; });
    return s;
}

/// d phi evaluated on each (k+1)-cell as the F2 sum over its facets.
inline Cochain differential(const WeightedComplex& X, const Cochain& phi) {
    check_host(X, phi, "differential");
    const int k = phi.k();
    if (k >= X.dimension()) throw TopDimension("no coboundary above top dimension");
    Cochain out = Cochain::zero(X, k + 1);
    const std::size_t m = X.count(k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned par = 0;
        for (int f : X.facets_of(k + 1, i)) par ^= static_cast<unsigned>(phi.get(f));
        if (par) out.set(i, true);
    }
    return out;
}

/// phi_tau on the provided link complex: phi_tau(sigma) = phi(tau u sigma).
/// The caller passes L = X.link(tau) (kept separate so repeated localizations
/// can share one link build).
inline Cochain localize(const WeightedComplex& X, const Cochain& phi, const Simplex& tau,
                        const WeightedComplex& L) {
    check_host(X, phi, "localize");
    const int j = tau.dim();
    const int k = phi.k();
    if (j > k) throw BadDimensions("localize: dim tau exceeds cochain dimension");
    if (!X.contains(tau)) throw SimplexNotInComplex(tau.str());
    Cochain out(k - j - 1, L.count(k - j - 1), L.hash());
    const auto& sigmas = L.cells(k - j - 1);
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const auto idx = X.index_of(tau.union_with(sigmas[i]));
        if (idx && phi.get(*idx)) out.set(i, true);
    }
    return out;
}

/// ||phi_tau|| computed inside X: sum of m(gamma) over gamma in supp(phi)
/// containing tau. Agrees with norm(link, localize(...)) because the link
/// weight of sigma is m(tau u sigma).
inline Rational localized_norm(const WeightedComplex& X, const Cochain& phi, const Simplex& tau) {
    check_host(X, phi, "localized_norm");
    Rational s = 0;
    const auto& cells = X.cells(phi.k());
    const auto& w = X.weights(phi.k());
    phi.for_each_set([&](std::size_t i) {
        if (tau.subset_of(cells[i])) s += w[i];
    });
    return s;
}

/// ||d_tau phi_tau|| computed inside X: for each (k+1)-cell delta containing
/// tau, d_tau phi_tau picks up m(delta) iff an odd number of k-faces gamma
/// with tau <= gamma < delta lie in supp(phi).
inline Rational localized_diff_norm(const WeightedComplex& X, const Cochain& phi,
                                    const Simplex& tau) {
    check_host(X, phi, "localized_diff_norm");
    const int k = phi.k();
    if (k >= X.dimension()) throw TopDimension("no coboundary above top dimension");
    Rational s = 0;
    const auto& cells_up = X.cells(k + 1);
    const auto& w_up = X.weights(k + 1);
    for (std::size_t i = 0; i < cells_up.size(); ++i) {
        if (!tau.subset_of(cells_up[i])) continue;
        unsigned par = 0;
        for (int f : X.facets_of(k + 1, i)) {
            if (phi.get(f) && tau.subset_of(X.cell(k, f))) par ^= 1u;
        }
        if (par) s += w_up[i];
    }
    return s;
}

}  // namespace hdx
