#pragma once

#include <stdexcept>
#include <string>

namespace cgs {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// A precondition of a mathematical operation does not hold.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The group does not carry enough representation data for the request.
struct MissingRepresentationData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : ValidationError {
  using ValidationError::ValidationError;
};

struct OrthogonalityError : ValidationError {
  using ValidationError::ValidationError;
};

struct SizeMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

// Non-free action where an analytic formula needs det(E - R(g)) != 0.
struct NonFreeAction : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace cgs
