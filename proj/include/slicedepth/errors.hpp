#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicedepth {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySequenceError : Error {
    EmptySequenceError() : Error("continued fraction: empty coefficient sequence") {}
};

/// Some suffix of the coefficient sequence evaluates to 0, so the next
/// division in the nesting is undefined.
struct ZeroTailError : Error {
    explicit ZeroTailError(std::size_t tail_start)
        : Error("continued fraction: tail starting at coefficient " +
                std::to_string(tail_start + 1) + " evaluates to zero") {}
};

struct BadParityError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct IdentityError : Error {
    using Error::Error;
};

struct OddLengthError : Error {
    OddLengthError()
        : Error("even continued fraction has odd length; it presents a link, not a knot") {}
};

struct NotEvenError : Error {
    using Error::Error;
};

struct InvalidPretzelError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t row_, std::size_t column_, const std::string& message)
        : Error("row " + std::to_string(row_) + ", column " + std::to_string(column_) + ": " + message),
          row(row_),
          column(column_) {}
    std::size_t row;
    std::size_t column;
};

struct InvariantError : Error {
    InvariantError(std::size_t row_, const std::string& message)
        : Error("row " + std::to_string(row_) + ": " + message), row(row_) {}
    std::size_t row;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t column_, const std::string& message)
        : Error(message + " (column " + std::to_string(column_) + ")"), column(column_) {}
    std::size_t column;
};

struct EmptyListError : Error {
    EmptyListError() : Error("empty coefficient list") {}
};

}  // namespace slicedepth
