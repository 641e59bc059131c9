#ifndef NEARIRR_ERRORS_HPP
#define NEARIRR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nearirr {

/// Malformed input expression. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A documented precondition of an operation was violated by the caller
/// (zero polynomial where nonzero is required, non-coprime pair, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& message) : std::runtime_error(message) {}
};

/// An internal consistency check failed. Any occurrence is a bug: the two
/// redundant computations that are required to agree did not.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

} // namespace nearirr

#endif
