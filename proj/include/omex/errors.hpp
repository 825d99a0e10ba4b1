#pragma once

#include <stdexcept>
#include <string>

namespace omex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series_invert / series_pow on a series whose constant term is not +-1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// Eta expansion whose leading exponent does not land on the integer grid.
struct FractionalLeadingExponent : Error {
    using Error::Error;
};

// Eta expansion whose leading exponent is negative (a Laurent object, which
// TruncatedSeries cannot carry).
struct NegativeLeadingExponent : Error {
    using Error::Error;
};

// Enumeration request above the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Asymptotic comparison requested beyond the available exact table.
struct ExactValueMissing : Error {
    using Error::Error;
};

// r has a prime factor >= 5, outside the 2^m * 3^n family.
struct UnsupportedR : Error {
    using Error::Error;
};

// k below the admissible bound for the requested eta-quotient operation.
struct KTooSmall : Error {
    using Error::Error;
};

// Cusp-order computation on a quotient that fails the mod-24 conditions.
struct GhnViolated : Error {
    using Error::Error;
};

// Cache file failed the checksum (or is structurally truncated).
struct CorruptCache : Error {
    using Error::Error;
};

// Cache file written by a different format_version.
struct VersionMismatch : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

}  // namespace omex
