#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorKind {
  InvalidArgument,
  InvalidCode,
  NotApplicable,
  InvalidPipeDream,
  Incompatible,
  IndexOutOfRange,
  Unbounded,
  BadSigma,
  NonTerminating,
  NegativeResult,
  InsufficientData,
  NonIntegral,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidPipeDream: return "InvalidPipeDream";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::BadSigma: return "BadSigma";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::NegativeResult: return "NegativeResult";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::NonIntegral: return "NonIntegral";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can report the error by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schubert
