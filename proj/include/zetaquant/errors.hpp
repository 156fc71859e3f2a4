#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetaquant {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result left the representable range (overflow of an exponential, Gamma, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole, or a logarithm of an exactly vanishing factor.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::size_t index = npos) : Error(what), index_(index) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Index of the offending factor in expanded order, or npos when not applicable.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Invalid data handed to a constructor (zero-valued zero, bad multiplicity, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// The tail model does not place the operator in the requested trace ideal.
class CertificationError : public Error {
public:
    using Error::Error;
};

/// Two independent evaluation routes disagree beyond their tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Exact recognition of a rational zeta function failed.
class RecognitionError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace zetaquant
