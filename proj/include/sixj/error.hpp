#pragma once

#include <stdexcept>
#include <string>

namespace sixj {

enum class ErrorKind {
  Inadmissible,
  CapExceeded,
  FaceViolation,
  NotEuclidean,
  FlatUnsupported,
  StepLeavesEuclideanRegion,
  HalfIntegerResult,
  DegenerateAngle,
};

const char* to_string(ErrorKind kind) noexcept;

/// Thrown by every library operation whose precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sixj
