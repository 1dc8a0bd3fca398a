#pragma once

#include <stdexcept>
#include <string>

namespace liqshock {

// Error taxonomy. Every failure mode maps to exactly one of these; the CLI
// translates them to process exit codes (config 2, numerics 3, audits 4).

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: rejected before any numerics run.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical domain of a function (e.g. factor
// evaluation outside [0, horizon]).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// |u| exceeded the representable cap; exp(u) would poison the source term.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Iteration budget exhausted before the increment tolerance was met.
struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

// NaN or Inf surfaced in a state vector.
struct NonFiniteError : Error {
    explicit NonFiniteError(const std::string& msg) : Error(msg) {}
};

// Successive truncation-ladder solutions increased somewhere: the grid is
// too coarse for the discrete comparison structure.
struct MonotonicityViolationError : Error {
    explicit MonotonicityViolationError(const std::string& msg) : Error(msg) {}
};

// Tridiagonal pivot collapsed; the step system is not solvable.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

}  // namespace liqshock
