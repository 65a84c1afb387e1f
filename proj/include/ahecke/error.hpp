#pragma once

#include <stdexcept>
#include <string>

namespace ahecke {

/// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  InvalidInput,       // schema or precondition violated (exit 2)
  CapExceeded,        // an enumeration or support cap was hit (exit 3)
  PropertyViolation,  // a mathematical check failed (exit 4)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Machine-readable name, e.g. "NonCrystallographic".
  const std::string& code() const noexcept { return code_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::InvalidInput: return 2;
      case ErrorKind::CapExceeded: return 3;
      case ErrorKind::PropertyViolation: return 4;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, code, msg);
}
[[noreturn]] inline void fail_cap(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::CapExceeded, code, msg);
}
[[noreturn]] inline void fail_property(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::PropertyViolation, code, msg);
}

}  // namespace ahecke
