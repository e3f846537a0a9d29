#pragma once

#include <stdexcept>
#include <string>

namespace homtwist {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands built over different carrier dimensions.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// alpha^{-1} (or an antipode) was requested but the structure does not carry it.
struct MissingStructure : Error {
    explicit MissingStructure(const std::string& what) : Error(what) {}
};

// An alpha power outside the configured cache window was requested.
struct AlphaWindowExceeded : Error {
    explicit AlphaWindowExceeded(const std::string& what) : Error(what) {}
};

// Caller violated a documented precondition (wrong flavor, unvalidated input, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A consequence the theory guarantees failed to hold; indicates a defect, not bad input.
struct TheoremViolation : Error {
    explicit TheoremViolation(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace homtwist
