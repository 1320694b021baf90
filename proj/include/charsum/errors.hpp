#pragma once

#include <stdexcept>
#include <string>

namespace charsum {

// Raised when an input violates a mathematical precondition (non-primitive
// character, non-fundamental discriminant, argument out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a numerical procedure cannot reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace charsum
