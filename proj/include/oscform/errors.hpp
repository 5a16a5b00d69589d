#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oscform {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically meaningful failure (bad point, singular input, ...).
/// The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Structurally valid input whose fields contradict each other.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class VariableMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class DenominatorVanishes : public DomainError {
 public:
  explicit DenominatorVanishes(std::string denominator)
      : DomainError("denominator vanishes at the point: " + denominator),
        denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularPoint : public DomainError {
 public:
  using DomainError::DomainError;
};

class PointNotOnVariety : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedAmbient : public DomainError {
 public:
  using DomainError::DomainError;
};

class HyperplaneContainsAllOsculating : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateSecondForm : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotASurfaceInP3 : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An identity that exact arithmetic guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ChainBroken : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace oscform
