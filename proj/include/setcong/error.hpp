#pragma once

#include <stdexcept>
#include <string>

namespace setcong {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitExceeded : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct EmptyFamily : Error {
    using Error::Error;
};

struct NonCanonicalElement : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct IdentityInput : Error {
    using Error::Error;
};

struct PointCollision : Error {
    using Error::Error;
};

struct FallbacksExhausted : Error {
    using Error::Error;
};

struct TooManyStatements : Error {
    using Error::Error;
};

struct InconsistentEvidence : Error {
    using Error::Error;
};

/// Parse failure with 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

struct UnknownSetName : ParseError {
    using ParseError::ParseError;
};

struct IndexOutOfRange : ParseError {
    using ParseError::ParseError;
};

} // namespace setcong
