#ifndef MRWLAB_ERRORS_HPP
#define MRWLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrwlab {

/// Base class for all mrwlab errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: factorization breakdown, degenerate profile, zero variance.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Iterative method did not reach its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

} // namespace mrwlab

#endif
