#pragma once

#include <stdexcept>
#include <string>

namespace qfiber {

// Malformed input text. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  explicit ParseError(const std::string& message)
      : std::runtime_error(message), position_(0) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Well-formed input that violates a semantic requirement: unbound variables,
// precondition failures, contract violations.
class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfiber
