#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cogen {

enum class ErrorCode {
  // component_model
  UnknownStyle,
  UnknownKind,
  WrongPartCount,
  InvalidValue,
  // figma_extract
  AuthError,
  NotFound,
  RateLimited,
  TransportError,
  IoError,
  MalformedDocument,
  MissingGeometry,
  DepthLimitExceeded,
  // prompt_synthesis
  NoApplicableTemplate,
  EmptyInput,
  InvalidRatios,
  // prompt_parser
  NoComponentKind,
  // json_emitter
  SyntaxError,
  InvalidCharacter,
  SchemaViolation,
  // model_adapter
  AdapterError,
  TimeoutError,
  SpawnError,
  ProtocolError,
  // eval_harness
  InsufficientData,
  UnparseablePrompt,
  WrongSuiteShape,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownStyle: return "UnknownStyle";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::WrongPartCount: return "WrongPartCount";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::AuthError: return "AuthError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::TransportError: return "TransportError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::MissingGeometry: return "MissingGeometry";
    case ErrorCode::DepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorCode::NoApplicableTemplate: return "NoApplicableTemplate";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidRatios: return "InvalidRatios";
    case ErrorCode::NoComponentKind: return "NoComponentKind";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::AdapterError: return "AdapterError";
    case ErrorCode::TimeoutError: return "TimeoutError";
    case ErrorCode::SpawnError: return "SpawnError";
    case ErrorCode::ProtocolError: return "ProtocolError";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::UnparseablePrompt: return "UnparseablePrompt";
    case ErrorCode::WrongSuiteShape: return "WrongSuiteShape";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure; `offset()` carries a byte offset for syntax/character errors,
/// `subject()` the offending key or token, `retry_after()` the server hint for
/// rate limiting.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const std::string& subject() const noexcept { return subject_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  std::optional<double> retry_after() const noexcept { return retry_after_; }
  /// Code of the wrapped error, for errors that wrap another (AdapterError).
  std::optional<ErrorCode> cause() const noexcept { return cause_; }

  Error& with_subject(std::string subject) {
    subject_ = std::move(subject);
    return *this;
  }
  Error& with_offset(std::size_t offset) {
    offset_ = offset;
    return *this;
  }
  Error& with_retry_after(double seconds) {
    retry_after_ = seconds;
    return *this;
  }
  Error& with_cause(ErrorCode cause) {
    cause_ = cause;
    return *this;
  }

 private:
  ErrorCode code_;
  std::string subject_;
  std::optional<std::size_t> offset_;
  std::optional<double> retry_after_;
  std::optional<ErrorCode> cause_;
};

}  // namespace cogen
