#pragma once

#include <stdexcept>
#include <string>

namespace asf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed composition / partition / pair text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(q,t)") {}
};

/// Raised by the iterated limits when the argument has a pole at the origin
/// of the variable being sent to zero.
class PoleError : public Error {
 public:
  enum class Variable { T, Q };
  PoleError(Variable v, const std::string& what) : Error(what), variable_(v) {}
  Variable variable() const { return variable_; }

 private:
  Variable variable_;
};

/// Computation refused because it exceeds a configured cost limit.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class InsufficientVariablesError : public Error {
 public:
  using Error::Error;
};

class StabilizationFailure : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that must hold failed at runtime (e.g. a divided
/// difference left a remainder). Always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace asf
