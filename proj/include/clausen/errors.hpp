#pragma once

#include <stdexcept>
#include <string>

namespace clausen {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the contract of an operation (strip bounds, guards, orders).
struct DomainError : Error {
    using Error::Error;
};

/// A series or product hit its term cap before the tail bound was met.
struct TruncationError : Error {
    using Error::Error;
};

/// Evaluation requested too close to a zero of the seed / lattice point.
struct NearZeroError : Error {
    using Error::Error;
};

/// Continuous branch selection failed (refinement depth exhausted).
struct BranchError : Error {
    using Error::Error;
};

/// Adaptive interpolation reached its node cap without meeting the target.
struct ResolutionError : Error {
    using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

/// Malformed verification-suite request (unknown suite, bad bounds).
struct ConfigError : Error {
    using Error::Error;
};

/// Least-squares slope fit on degenerate data (collinear abscissae, too few points).
struct DegenerateFitError : Error {
    using Error::Error;
};

} // namespace clausen
