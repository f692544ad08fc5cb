#pragma once

#include <stdexcept>
#include <string>

namespace threshnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error {
    using Error::Error;
};

struct InvalidThreshold : Error {
    using Error::Error;
};

struct InvalidWeight : Error {
    using Error::Error;
};

// Carries a 1-based line number of the offending input line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A trajectory or operation count exceeded its a-priori convergence bound.
struct BoundViolation : Error {
    using Error::Error;
};

struct NotACover : Error {
    using Error::Error;
};

struct IncompleteConversion : Error {
    using Error::Error;
};

struct BudgetTooLarge : Error {
    using Error::Error;
};

}  // namespace threshnet
