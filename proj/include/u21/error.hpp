#ifndef U21_ERROR_HPP
#define U21_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace u21 {

enum class ErrorCode {
  // Parameter validation: caller supplied something the theory excludes.
  GenusTooSmall,
  NotCoprime,
  ToledoViolated,
  NotNormalized,
  InvalidChain,
  InvalidArgument,
  // Internal consistency: a formula produced something it never should.
  NonZeroRemainder,
  DivisionByZero,
  TruncationExceeded,
  UndefinedEvaluation,
  NegativeCoefficient,
  EulerMismatch,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ToledoViolated: return "ToledoViolated";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonZeroRemainder: return "NonZeroRemainder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::UndefinedEvaluation: return "UndefinedEvaluation";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
  }
  return "Unknown";
}

constexpr bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::GenusTooSmall:
    case ErrorCode::NotCoprime:
    case ErrorCode::ToledoViolated:
    case ErrorCode::NotNormalized:
    case ErrorCode::InvalidChain:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  bool is_validation() const noexcept { return is_validation_error(code_); }
  /// The message without the error-name prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace u21

#endif  // U21_ERROR_HPP
