#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gos {

enum class ErrorKind {
  DisconnectedGraph,
  BadValency,
  LabelGap,
  TauFixedPoint,
  StubReused,
  Syntax,
  NotOrientable,
  UnknownFamily,
  BadParameter,
  BudgetExceeded,
  ValencyTooLow,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::BadValency: return "BadValency";
    case ErrorKind::LabelGap: return "LabelGap";
    case ErrorKind::TauFixedPoint: return "TauFixedPoint";
    case ErrorKind::StubReused: return "StubReused";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ValencyTooLow: return "ValencyTooLow";
  }
  return "Unknown";
}

struct ValidationError {
  ErrorKind kind;
  std::string message;
};

class GosError : public std::runtime_error {
 public:
  GosError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by constructors when structural validation fails; carries the full error list.
class ValidationFailure : public GosError {
 public:
  explicit ValidationFailure(std::vector<ValidationError> errors)
      : GosError(errors.empty() ? ErrorKind::Syntax : errors.front().kind,
                 errors.empty() ? "invalid input" : errors.front().message),
        errors_(std::move(errors)) {}
  const std::vector<ValidationError>& errors() const { return errors_; }

 private:
  std::vector<ValidationError> errors_;
};

// Signals an implementation bug (broken induction invariant), never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& msg)
      : std::logic_error("InternalInconsistency: " + msg) {}
};

}  // namespace gos
