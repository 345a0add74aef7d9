#pragma once

#include <stdexcept>
#include <string>

namespace chessgeo {

/// Invalid input: parameters outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The closed-form construction does not cover this beta; callers should
/// fall back to the numeric shortest-path oracle.
class UnsupportedRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Direction outside the cones where the metric is known in closed form.
class CoverageError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Work limit exceeded (e.g. the oracle graph would be too large).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chessgeo
