#pragma once

#include <stdexcept>
#include <string>

namespace puresep {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad dimensions, out-of-range index, shape mismatch, violated precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An amplitude vector that is (numerically) zero where a direction is needed.
class DegenerateStateError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Input norm too far from 1 to be forgiven as rounding.
class NormalizationError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Malformed state file; carries the 1-based line number of the offence.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

/// Iteration did not converge, or a result failed its numerical postcondition.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Factor extraction reached a reconstruction fidelity below the bound.
class ExtractionError : public NumericalError {
public:
    ExtractionError(const std::string& what, double achieved_fidelity)
        : NumericalError(what), fidelity_(achieved_fidelity) {}
    double achieved_fidelity() const noexcept { return fidelity_; }

private:
    double fidelity_;
};

}  // namespace puresep
