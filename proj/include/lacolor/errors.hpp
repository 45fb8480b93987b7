#pragma once

#include <stdexcept>
#include <string>

namespace lacolor {

/// Element does not conform to the shape of its group spec.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ball enumeration hit its element-count cap.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its domain (e.g. pred of the root).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction precondition was violated (inconsistent decomposition,
/// window too small, index collision).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lacolor
