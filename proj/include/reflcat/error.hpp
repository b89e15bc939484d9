#pragma once

#include <stdexcept>
#include <string>

namespace reflcat {

// Mathematical precondition violated (zero has no square class, isotropic
// reflection axis, inadmissible family parameters, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Shapes or fields of the inputs do not fit together.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed an enumeration cap or the memory budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace reflcat
