#pragma once

#include <stdexcept>

namespace selfaffine {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A slope or one-sided quantity was requested at a grid point where it is undefined.
struct GridPointError : DomainError {
    using DomainError::DomainError;
};

/// A strict inequality could not be decided at working precision.
/// Callers should retry with an exact (rational or quadratic) parameter.
struct PrecisionError : Error {
    using Error::Error;
};

/// A configured size cap (points, states, period length) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// Bisection bracket was invalid; indicates a precision misconfiguration.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace selfaffine
