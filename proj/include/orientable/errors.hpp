#pragma once

#include <stdexcept>
#include <string>

namespace orientable {

// Raised when an argument lies outside the mathematical domain of an operation,
// e.g. asking for the parent of a word that is not an asymmetric bracelet.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an order or size exceeds what an operation supports.
class UnsupportedSize : public std::out_of_range {
 public:
  explicit UnsupportedSize(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace orientable
