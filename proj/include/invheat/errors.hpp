#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace invheat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A function evaluated to a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double location)
        : Error(what), location_(location) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// Argument outside the domain of an operation (out-of-range abscissa,
/// non-positive diffusivity, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Zero or vanishing pivot during elimination.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::size_t pivot_index)
        : Error(what), pivot_index_(pivot_index) {}
    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// Malformed problem text. `line` is 1-based, `offset` is the 0-based
/// character offset within that line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : Error(what), line_(line), offset_(offset) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// The denominator of the fixed-point operator vanished.
class DegenerateProblemError : public Error {
public:
    using Error::Error;
};

/// One of the stability constants C0..C3 is not positive.
class AssumptionViolation : public Error {
public:
    AssumptionViolation(const std::string& what, std::string constant)
        : Error(what), constant_(std::move(constant)) {}
    const std::string& constant() const noexcept { return constant_; }

private:
    std::string constant_;
};

/// Fixed-point iteration did not reach its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> history)
        : Error(what), history_(std::move(history)) {}
    const std::vector<double>& residual_history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

/// u_1 - u_0 fell below the division guard in the discrete a-formula.
class FlatGradientError : public Error {
public:
    FlatGradientError(const std::string& what, std::size_t level, std::size_t iteration)
        : Error(what), level_(level), iteration_(iteration) {}
    std::size_t level() const noexcept { return level_; }
    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t level_;
    std::size_t iteration_;
};

}  // namespace invheat
