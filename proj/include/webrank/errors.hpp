#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace webrank {

/// Malformed edge-list line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid input (missing header, bad node count).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Node id outside [0, n).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Vector length does not match the graph.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (e.g. c = 1 in a resolvent).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The graph has no ergodic Pure-OUT structure for the requested analysis.
class DegenerateStructure : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string &what, double residual, std::size_t iterations)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + " after "
                             + std::to_string(iterations) + " iterations)"),
          residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    double residual_;
    std::size_t iterations_;
};

} // namespace webrank
