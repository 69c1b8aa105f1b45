#pragma once

#include <stdexcept>
#include <string>

namespace mdlie {

/// Raised when arguments violate an operation's shape or precondition contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by document parsers; `where()` names the offending location.
class ParseError : public InputError {
 public:
  ParseError(std::string where, const std::string& what)
      : InputError(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace mdlie
