#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Parameter validation failure (bad ranges, excluded cases).
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

/// Gamma function evaluated at a nonpositive integer.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature could not meet the requested tolerance.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A ground-state vector contained a nonpositive entry.
struct NonpositiveGroundState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnboundedSupport : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace hardy
