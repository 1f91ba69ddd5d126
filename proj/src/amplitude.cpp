#include "hyperent/amplitude.hpp"

#include <cmath>

#include "hyperent/error.hpp"

namespace hyperent {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateOccupancy: return "DuplicateOccupancy";
    case ErrorCode::AmplitudeOverflow: return "AmplitudeOverflow";
    case ErrorCode::InexactAmplitude: return "InexactAmplitude";
    case ErrorCode::PatternArity: return "PatternArity";
    case ErrorCode::UnsupportedAngle: return "UnsupportedAngle";
    case ErrorCode::UnwiredMode: return "UnwiredMode";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::DoubleTagging: return "DoubleTagging";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::OracleBound: return "OracleBound";
  }
  return "Unknown";
}

Amplitude Amplitude::boosted(std::uint32_t steps) const {
  if (steps > half_pow_) {
    throw Error(ErrorCode::AmplitudeOverflow,
                "magnitude would exceed 1 (half power " + std::to_string(half_pow_) + " boosted by " +
                    std::to_string(steps) + ")");
  }
  return Amplitude(sign(), half_pow_ - steps);
}

std::optional<Amplitude> Amplitude::add(Amplitude a, Amplitude b) {
  if (a.half_pow_ != b.half_pow_) {
    throw Error(ErrorCode::InexactAmplitude,
                a.to_string() + " + " + b.to_string() + " is not of the form ±(1/√2)^k");
  }
  if (a.sign() != b.sign()) return std::nullopt;
  // 2 * 2^(-k/2) = 2^(-(k-2)/2)
  if (a.half_pow_ < 2) {
    throw Error(ErrorCode::AmplitudeOverflow,
                a.to_string() + " + " + b.to_string() + " needs a negative half power");
  }
  return Amplitude(a.sign(), a.half_pow_ - 2);
}

double Amplitude::value() const {
  return sign() * std::pow(2.0, -0.5 * static_cast<double>(half_pow_));
}

std::string Amplitude::to_string() const {
  const char* s = negative_ ? "-" : "+";
  if (half_pow_ == 0) return std::string(s) + "1";
  return std::string(s) + "(1/√2)^" + std::to_string(half_pow_);
}

}  // namespace hyperent
