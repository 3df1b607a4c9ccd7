#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wadd {

enum class ErrorKind {
  PoleAtNonpositiveB,
  PoleHit,
  ParameterPole,
  NearPole,
  NoConvergence,
  UnsupportedRegion,
  UnsupportedOrder,
  IndexOutOfRange,
  GeometryViolation,
  CoincidentPoints,
  CoincidentRadii,
  ConfluentPoint,
  DerivativeStepUnderflow,
  PrecisionExhausted,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported as an Error carrying a kind, so
/// callers can branch on the reason without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wadd
