#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hdx/errors.hpp"

namespace hdx {

// All weights, norms and isoperimetric constants are exact rationals.
// Denominators grow quickly once the constant ledgers get chained (the k = 2
// ledger reaches ~1e27), so a fixed-width representation is not an option.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical text form: reduced "p/q" when q != 1, plain "p" otherwise.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Accepts "p", "p/q" and optional leading minus. Throws ParseError.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw ParseError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

/// A rational extended with +infinity; used for systoles and expansion
/// constants whose defining search can be empty.
struct ExtRational {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static ExtRational inf() { return ExtRational{true, Rational()}; }
    static ExtRational of(Rational v) { return ExtRational{false, std::move(v)}; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
};

inline std::string format_ext(const ExtRational& e) {
    return e.infinite ? std::string("inf") : format_rational(e.value);
}

inline std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw BadArgs("factorial_u64: n out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline Integer binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: r is always a binomial prefix
    }
    return r;
}

}  // namespace hdx
