#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncd {

/// Raised when a presentation violates a structural invariant (rule shape,
/// missing rule, rank mismatch) or fails validation in a downstream constructor.
class PresentationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation requires a validated model (calculus, Cartan pair)
/// and the model fails one of its checks.
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace ncd
