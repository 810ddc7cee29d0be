#pragma once

#include <stdexcept>
#include <string>

namespace arnold {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad order, bad label, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a certified answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class CriticalPointError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootBracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoOrbitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AmbiguityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EmptyPlateauError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BadWindowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ContinuationLostError : public NumericalError {
 public:
  ContinuationLostError(const std::string& what, double b)
      : NumericalError(what), b_(b) {}

  /// Parameter b at which the continuation window failed to bracket.
  double b() const noexcept { return b_; }

 private:
  double b_;
};

}  // namespace arnold
