#pragma once

#include <stdexcept>
#include <string>

namespace matchfab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (generation, enumeration, determinant order,
// cycle count) would be exceeded.  CLI maps this to exit code 3.
struct CapExceededError : Error {
    using Error::Error;
};

// Input is outside the mathematical domain of an operation
// (e.g. the Sierpinski count formula at g = 1).
struct DomainError : Error {
    using Error::Error;
};

// Two routes that must agree produced different values, or an
// internal consistency assertion failed.  Always a bug or a broken claim.
struct InternalError : Error {
    using Error::Error;
};

// A determinant that should be a perfect square is not.
struct NotPerfectSquareError : Error {
    using Error::Error;
};

// A graph required to be connected is not.
struct DisconnectedError : Error {
    using Error::Error;
};

} // namespace matchfab
