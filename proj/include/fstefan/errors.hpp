#pragma once

#include <stdexcept>
#include <string>

namespace fstefan {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid problem parameters or arguments outside an accepted domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the range where a function is evaluated accurately.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure failed on otherwise valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Series hit its hard term cap before the stopping rule fired.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Monotone root search could not bracket the target.
class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fstefan
