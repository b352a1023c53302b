#ifndef TOPOLEVEL_ERRORS_HPP
#define TOPOLEVEL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topolevel {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed or supplied quantity violates its admissible range
// (e.g. a kernel mass outside (0,1)).
struct OutOfRangeError : Error {
    using Error::Error;
};

// A regression operation was asked of a sample with no responses.
struct MissingResponsesError : Error {
    using Error::Error;
};

// A bound (p_max, p_min, y_max) required by the requested constant is absent.
struct MissingBoundError : Error {
    using Error::Error;
};

// Complex construction exceeded the simplex budget.
struct CapacityExceededError : Error {
    std::uint64_t budget;
    explicit CapacityExceededError(std::uint64_t budget_, const std::string& msg)
        : Error(msg), budget(budget_) {}
};

// Operation not implemented for the requested ambient dimension.
struct UnsupportedDimensionError : Error {
    using Error::Error;
};

// The pair passed to an inclusion-based operation is not prefix-nested.
struct NotASubcomplexError : Error {
    using Error::Error;
};

// Operation requires a different coefficient field.
struct WrongFieldError : Error {
    using Error::Error;
};

// The level scan found no level with the requested rank signature.
struct NoStableLevelError : Error {
    using Error::Error;
};

// Unknown output format name.
struct UnsupportedFormatError : Error {
    using Error::Error;
};

// Malformed input file; carries a 1-based line number.
struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg) : Error(msg), line(line_) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace topolevel

#endif
