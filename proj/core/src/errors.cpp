#include "mulint/errors.hpp"

#include <sstream>

namespace mulint {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::Evaluation: return "EvaluationError";
    case ErrorKind::NonDifferentiable: return "NonDifferentiable";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroValue: return "ZeroValue";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::BranchJump: return "BranchJump";
    case ErrorKind::ZeroOnCurve: return "ZeroOnCurve";
    case ErrorKind::RefinementExhausted: return "RefinementExhausted";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::Syntax, message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

ToleranceNotMet::ToleranceNotMet(ComplexValue estimate, double est_error,
                                 const std::string& message)
    : Error(ErrorKind::ToleranceNotMet, message), estimate_(estimate), est_error_(est_error) {}

namespace {
std::string overflow_message(ComplexValue w) {
  std::ostringstream os;
  os.precision(17);
  os << "result exp(w) overflows; log value w = " << w.real() << (w.imag() < 0 ? "" : "+")
     << w.imag() << "i";
  return os.str();
}
}  // namespace

OverflowSignal::OverflowSignal(ComplexValue log_value)
    : Error(ErrorKind::Overflow, overflow_message(log_value)), log_value_(log_value) {}

}  // namespace mulint
