#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mulint {

using ComplexValue = std::complex<double>;

enum class ErrorKind {
  Syntax,
  UnknownIdentifier,
  Evaluation,
  NonDifferentiable,
  ParameterOutOfRange,
  InvalidCurve,
  InvalidArgument,
  ZeroValue,
  NonPositiveValue,
  BranchJump,
  ZeroOnCurve,
  RefinementExhausted,
  ToleranceNotMet,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. `kind()` identifies the failure
/// class so frontends can map it to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when adaptive quadrature hits its depth limit. Carries the best
/// available estimate and its error bound.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(ComplexValue estimate, double est_error, const std::string& message);

  ComplexValue estimate() const noexcept { return estimate_; }
  double est_error() const noexcept { return est_error_; }

 private:
  ComplexValue estimate_;
  double est_error_;
};

/// Raised instead of returning exp(w) when Re(w) is too large to represent.
/// The logarithm w is the faithful datum and is carried along.
class OverflowSignal : public Error {
 public:
  explicit OverflowSignal(ComplexValue log_value);

  ComplexValue log_value() const noexcept { return log_value_; }

 private:
  ComplexValue log_value_;
};

}  // namespace mulint
