#pragma once

#include <stdexcept>
#include <string>

namespace paucity {

// Common base so the CLI can map failures onto its exit-code scheme.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// The (system, X) combination cannot be guaranteed exact; shrink X or k.
struct CapacityError : Error {
    using Error::Error;
};

// The configured work budget would be (or was) exceeded.
struct BudgetError : Error {
    using Error::Error;
};

// A system whose rows are all zero has no normal form.
struct DegenerateSystemError : Error {
    using Error::Error;
};

// Zero admits no finite factorization into nonzero parts.
struct ZeroProductError : Error {
    using Error::Error;
};

// Not enough usable data points for a fit.
struct InsufficientDataError : Error {
    using Error::Error;
};

// A minimal polynomial must be monic with integer coefficients.
struct InvalidMinpolyError : Error {
    using Error::Error;
};

// Malformed input file or malformed field value.
struct ParseError : Error {
    using Error::Error;
};

// Two enumeration methods that must agree did not.
struct MismatchError : Error {
    using Error::Error;
};

} // namespace paucity
