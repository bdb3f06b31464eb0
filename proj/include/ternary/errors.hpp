#pragma once

#include <stdexcept>
#include <string>

namespace ternary {

/// Base class for all domain-level failures (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion requested for an element with vanishing scalar part.
class NotInvertibleError : public DomainError {
public:
    NotInvertibleError() : DomainError("element is not invertible: scalar part is zero") {}
    explicit NotInvertibleError(const std::string& what) : DomainError(what) {}
};

/// A weighted norm left the representable floating range even in log domain.
class OverflowError : public DomainError {
public:
    explicit OverflowError(const std::string& what) : DomainError(what) {}
};

/// Neither convergence criterion of a power-series application holds.
class DivergenceGuardError : public DomainError {
public:
    explicit DivergenceGuardError(const std::string& what) : DomainError(what) {}
};

/// Spectral-density tail is not integrable against the kernel bound.
class TailDivergenceError : public DomainError {
public:
    explicit TailDivergenceError(const std::string& what) : DomainError(what) {}
};

/// Input function lies outside the operator domain (divergent weighted integral).
class DomainViolationError : public DomainError {
public:
    explicit DomainViolationError(const std::string& what) : DomainError(what) {}
};

/// Riemann refinement hit its cap without meeting the tolerance.
class NoConvergenceError : public DomainError {
public:
    explicit NoConvergenceError(const std::string& what) : DomainError(what) {}
};

/// Expression syntax error; `position` is a 0-based character offset (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace ternary
