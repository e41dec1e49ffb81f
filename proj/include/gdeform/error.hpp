#pragma once

#include <stdexcept>
#include <string>

namespace gdeform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic or algebraic precondition violated (division by zero, rank deficiency, ...).
class MathError : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy a structural requirement (not G-stable, not a homomorphism, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configured size cap (group order, tensor width) was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input; the message carries the offending field path.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace gdeform
