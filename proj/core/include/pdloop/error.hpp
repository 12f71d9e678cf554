#pragma once

#include <stdexcept>
#include <string>

namespace pdloop {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, non-prime modulus, out-of-range fields.
/// Distinct from a well-formed spec that fails a validation constraint.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A well-formed spec was passed to an operation whose precondition
/// requires it to validate.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// The inputs are outside the range where the underlying results hold
/// (for example m <= 2, or a complex without a nontrivial cup product).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace pdloop
