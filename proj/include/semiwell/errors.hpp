#pragma once

// Error taxonomy shared by every module.  All failures are typed so callers
// can distinguish "you asked for something outside the certified domain"
// (DomainError and friends) from "the numerics gave up" (StiffnessError,
// PrecisionError, DerivativeError, GridError).

#include <stdexcept>
#include <string>

namespace semiwell {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside a precondition (negative energy, |z| beyond the
// certified series domain, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma evaluated at a non-positive integer; callers switch to the
// projective coefficient path.
class PoleError : public Error {
public:
    using Error::Error;
};

// 1F1 with a non-positive-integer lower parameter c.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Logarithmic derivative requested at a node of psi.
class NodeError : public Error {
public:
    using Error::Error;
};

// Cancellation estimate exceeds the promised accuracy.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Riccati integrator step collapse (log-derivative pole crossing left
// unhandled would stall the ODE).
class StiffnessError : public Error {
public:
    using Error::Error;
};

// Operation not defined for this WellConfig variant.
class VariantError : public Error {
public:
    using Error::Error;
};

// The phi-pair closed forms are certified only for a = b.
class GeometryError : public Error {
public:
    using Error::Error;
};

// Adaptive phase grid exhausted its refinement budget.
class GridError : public Error {
public:
    using Error::Error;
};

// Root bracket endpoints do not straddle a sign change.
class BracketError : public Error {
public:
    using Error::Error;
};

// Numerical k-derivative stencil could not be unwrapped consistently.
class DerivativeError : public Error {
public:
    using Error::Error;
};

}  // namespace semiwell
