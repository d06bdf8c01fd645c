#pragma once

// Error hierarchy. Every error carries the module that raised it and a
// machine-readable code; the CLI maps codes to exit statuses.

#include <stdexcept>
#include <string>

namespace hcizlab {

enum class ErrorCode { usage, capacity, domain, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}
  ErrorCode code() const { return code_; }
  const std::string& module() const { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

/// Invalid arguments or preconditions violated by the caller.
struct UsageError : Error {
  UsageError(std::string module, const std::string& message) : Error(ErrorCode::usage, std::move(module), message) {}
};

/// A computation exceeds the configured size guard.
struct CapacityError : Error {
  CapacityError(std::string module, const std::string& message)
      : Error(ErrorCode::capacity, std::move(module), message) {}
};

/// Mathematically undefined input: singular matrices, poles, points outside a disc.
struct DomainError : Error {
  DomainError(std::string module, const std::string& message) : Error(ErrorCode::domain, std::move(module), message) {}
};

/// A numerical procedure could not certify its result.
struct NumericalError : Error {
  NumericalError(std::string module, const std::string& message)
      : Error(ErrorCode::numerical, std::move(module), message) {}
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage:
      return "usage";
    case ErrorCode::capacity:
      return "capacity";
    case ErrorCode::domain:
      return "domain";
    case ErrorCode::numerical:
      return "numerical";
  }
  return "unknown";
}

}  // namespace hcizlab
