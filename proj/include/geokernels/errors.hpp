#ifndef GEOKERNELS_ERRORS_HPP
#define GEOKERNELS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geokernels {

// Input failed a precondition (non-unit vector, asymmetric matrix, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Operation not defined for the requested space kind.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geokernels

#endif
