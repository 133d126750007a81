#pragma once

#include <stdexcept>
#include <string>

namespace zvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (x <= 0 for log_gamma, s out of strip, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integer/non-integer classification of c does not match the formula requested.
class ClassificationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A sum that is singular termwise (1 - cos(2k alpha) vanishes).
class SingularTermError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative or adaptive procedure ran out of budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zvar
