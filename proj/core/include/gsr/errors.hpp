#pragma once

#include <stdexcept>
#include <string>

namespace gsr {

/// Input text could not be parsed. Lines are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A configured search or enumeration bound was hit before completion.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fuzzy subset was applied to a structure it does not live on.
class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gsr
