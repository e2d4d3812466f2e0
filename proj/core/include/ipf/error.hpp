#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ipf {

// Two values that must share a dimension do not.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A value lies outside the domain of a partial operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A coordinate would leave the positive range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Text input could not be parsed; carries the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string token)
      : std::runtime_error(message), token_(std::move(token)) {}

  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace ipf
