#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbrad {

/// Raised when an operation's mathematical precondition fails (unit ideal
/// passed to a Hilbert-scheme operation, inadmissible polynomial, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed text input. Carries a 1-based position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hilbrad
