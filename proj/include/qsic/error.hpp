#pragma once

#include <stdexcept>
#include <string>

namespace qsic {

enum class ErrorKind {
  invalid_parameter,
  capacity_exceeded,
  invalid_state,
  internal_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::capacity_exceeded: return "capacity-exceeded";
    case ErrorKind::invalid_state: return "invalid-state";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the `ErrorKind`
/// categories so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::invalid_parameter, what);
}

}  // namespace qsic
