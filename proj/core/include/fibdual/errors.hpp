#pragma once

#include <stdexcept>

namespace fibdual {

// Thrown when a dual quaternion (or dual number) has no inverse, i.e. the
// real part of its norm is zero.
struct NonInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when an identity is evaluated at indices outside its declared domain.
struct DomainViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a requested check range is empty after intersecting with the
// identity's domain.
struct EmptyRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace fibdual
