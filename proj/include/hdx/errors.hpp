#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

/// Base class for all errors raised by the library. Every specific error
/// below carries a human-readable message naming the offending object.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadArgs : Error {
    using Error::Error;
};

// -- complex construction / validation ---------------------------------------

struct MixedDimension : Error {
    using Error::Error;
};
struct DuplicateTopSimplex : Error {
    using Error::Error;
};
struct NonPositiveWeight : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct SimplexNotInComplex : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct TopDimension : Error {
    using Error::Error;
};
struct BadDimensions : Error {
    using Error::Error;
};

// -- spectral -----------------------------------------------------------------

struct Disconnected : Error {
    using Error::Error;
};
struct DisconnectedLink : Error {
    using Error::Error;
};
struct EmptyOrFullSubset : Error {
    using Error::Error;
};

// -- enumeration / search -----------------------------------------------------

struct CapExceeded : Error {
    using Error::Error;
};
struct ZeroCochain : Error {
    using Error::Error;
};

// -- hypotheses / parameters --------------------------------------------------

struct HypothesisNotMet : Error {
    using Error::Error;
};
struct BadEpsilon : Error {
    using Error::Error;
};
struct BadK : Error {
    using Error::Error;
};

// -- generators ---------------------------------------------------------------

struct UnsupportedQ : Error {
    using Error::Error;
};
struct EmptyTopLevel : Error {
    using Error::Error;
};

// -- io -----------------------------------------------------------------------

struct ParseError : Error {
    using Error::Error;
};

}  // namespace hdx
