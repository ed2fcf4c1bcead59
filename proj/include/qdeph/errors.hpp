// errors.hpp — exception types shared by the qdeph modules

#pragma once

#include <stdexcept>
#include <string>

namespace qdeph {

// Bad input to an operation: out-of-range angle, non-positive temperature, ...
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure during a computation that had valid inputs.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public ComputationError {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : ComputationError(what + " (estimate " + std::to_string(estimate) + ", error bound " +
                           std::to_string(error_bound) + ")"),
          estimate_(estimate),
          error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// Initial coherence vanishes identically; gamma_cor and chi are undefined.
class DegenerateScheme : public ComputationError {
public:
    using ComputationError::ComputationError;
};

// The argument of the logarithm in gamma_cor is not positive.
class NonPositiveLogArgument : public ComputationError {
public:
    NonPositiveLogArgument(const std::string& what, double argument)
        : ComputationError(what), argument_(argument) {}
    double argument() const noexcept { return argument_; }

private:
    double argument_;
};

// Fock-space truncation too small for the requested temperature.
class TruncationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace qdeph
