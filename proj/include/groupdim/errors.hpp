#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupdim {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Value outside the domain of an operation (e.g. sqrt of a nonpositive integer).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parse failure; carries the byte offset and a description of what was expected.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// A forced I_k override that is not a legal maximal independent set.
class InvalidForcedI : public Error {
public:
    using Error::Error;
};

/// An internal identity failed; always a bug, never an input problem.
class InternalInvariantViolation : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    RankDeficient() : Error("lattice basis is not of full column rank") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DegenerateImage : public Error {
public:
    using Error::Error;
};

/// Constructor-time violation of the closed-group invariants.
class InvalidClosedGroup : public Error {
public:
    using Error::Error;
};

/// Malformed job input (CLI / bindings surface).
class InvalidInput : public Error {
public:
    using Error::Error;
};

}  // namespace groupdim
