#pragma once

#include <stdexcept>
#include <string>

namespace qgauge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (non-positive mass, bad grid, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Input lies outside the documented support of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// qE0 = 0 (or has the unsupported sign) where an Airy-based quantity needs it.
class DegenerateField : public DomainError {
public:
    using DomainError::DomainError;
};

/// A shifted sample point falls outside the source grid (interpolation mode).
class OutOfDomain : public DomainError {
public:
    using DomainError::DomainError;
};

/// A field's gauge or frame tag does not match what an operation requires.
class TagMismatch : public Error {
public:
    using Error::Error;
};

/// Iterative or adaptive numerics failed to meet the requested tolerance.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Zero pivot in a tridiagonal solve.
class SolverBreakdown : public Error {
public:
    using Error::Error;
};

/// Non-finite amplitudes appeared during time propagation.
class NumericalBreakdown : public Error {
public:
    NumericalBreakdown(const std::string& what, double last_good_time)
        : Error(what), last_good_time_(last_good_time) {}

    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

}  // namespace qgauge
