#pragma once

#include <stdexcept>
#include <string>

namespace knotlineage {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (shadow lines, PD codes, cache files).
struct ParseError : Error {
    using Error::Error;
};

// Input that parses but does not describe a single-curve sphere diagram.
struct RealizabilityError : Error {
    using Error::Error;
};

// Inconsistent shipped data (duplicate polynomial keys, bad recipes).
struct DataError : Error {
    using Error::Error;
};

// A configured resource budget was exhausted.
struct LimitError : Error {
    using Error::Error;
};

// A diagram's polynomial key is absent from the reference table: either the
// table is too shallow or a genuine key collision surfaced.  Never guessed
// around.
struct UnclassifiedError : Error {
    using Error::Error;
};

}  // namespace knotlineage
