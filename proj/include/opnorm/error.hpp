#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opnorm {

/// A precondition on the mathematical input was violated (wrong exponent
/// range for an operation, zero vector where a direction is needed, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed matrix file. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace opnorm
