#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnauq {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric precondition was violated (degenerate sample, insufficient
/// sample size, out-of-range skewness, nonpositive frequency, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A denominator or linear system came too close to singular. The Monte
/// Carlo engine treats this as a rejected draw; everywhere else it is fatal.
class SingularError : public Error {
public:
    using Error::Error;
};

/// A scenario or pipeline input failed validation.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. Carries a 1-based line number and,
/// where it makes sense, a 1-based column number (0 = not applicable).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error(what + " (line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : "") + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace vnauq
