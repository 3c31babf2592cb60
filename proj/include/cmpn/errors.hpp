#pragma once

#include <stdexcept>
#include <string>

namespace cmpn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct BadBlockSize : Error {
    using Error::Error;
};

struct NotBlockwiseCommuting : Error {
    using Error::Error;
};

// Two provably-equivalent criteria disagreed; this always indicates a bug
// in the library itself, never bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

} // namespace cmpn
