#pragma once

#include <stdexcept>
#include <string>

namespace covspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad generator, S not
/// contained in T, mismatched degrees, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Input is structurally invalid: not a homomorphism, not normal, not
/// positive definite, malformed file.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A configured enumeration limit would be exceeded.
class CapacityError : public Error {
public:
  using Error::Error;
};

}  // namespace covspec
