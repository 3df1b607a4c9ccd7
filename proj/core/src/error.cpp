#include "wadd/error.hpp"

namespace wadd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleAtNonpositiveB: return "PoleAtNonpositiveB";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::ParameterPole: return "ParameterPole";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedRegion: return "UnsupportedRegion";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GeometryViolation: return "GeometryViolation";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::CoincidentRadii: return "CoincidentRadii";
    case ErrorKind::ConfluentPoint: return "ConfluentPoint";
    case ErrorKind::DerivativeStepUnderflow: return "DerivativeStepUnderflow";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace wadd
