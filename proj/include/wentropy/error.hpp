#pragma once

#include <stdexcept>
#include <string>

namespace wentropy {

// Argument outside the mathematical domain of an operation (empty sequence,
// nonpositive weight, vertex out of range, family parameters out of bounds).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Hypothesis of a result not met by otherwise well-formed input.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wentropy
