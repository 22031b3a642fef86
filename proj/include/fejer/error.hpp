#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fejer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifierError : public Error {
 public:
  explicit UnknownIdentifierError(std::string name, std::size_t position)
      : Error("unknown identifier '" + name + "' at position " + std::to_string(position)),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An operation was evaluated outside its real domain (log of a nonpositive
/// number, sqrt of a negative, 0^negative, ...).
class DomainError : public Error {
 public:
  DomainError(std::string subexpression, double x, const std::string& reason)
      : Error("domain error in '" + subexpression + "' at x=" + format(x) + ": " + reason),
        subexpression_(std::move(subexpression)),
        x_(x) {}
  const std::string& subexpression() const noexcept { return subexpression_; }
  double x() const noexcept { return x_; }

 private:
  static std::string format(double v);
  std::string subexpression_;
  double x_;
};

/// Adaptive integration could not meet its tolerance within max_depth bisections.
class DepthExhaustedError : public Error {
 public:
  DepthExhaustedError(double lo, double hi, double error_estimate);
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double lo_, hi_, error_estimate_;
};

/// Invalid parameter value (range violations, non-conjugate exponents, span
/// mismatches, non-density weights, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class NonIntegrableKernelError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class SymmetryViolationError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class NegativityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

}  // namespace fejer
