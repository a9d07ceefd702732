#pragma once

#include <stdexcept>
#include <string>

namespace ifsel {

// Thrown when a domain object or configuration violates one of its
// documented invariants. what() names the failed invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ifsel
