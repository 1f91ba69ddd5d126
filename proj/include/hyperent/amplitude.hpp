#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hyperent {

/// Exact coefficient of the form sign * (1/sqrt(2))^half_pow.
///
/// Ideal linear-optics evolutions of a single pump photon only ever produce
/// coefficients of this shape, so state comparison never needs a tolerance.
class Amplitude {
 public:
  constexpr Amplitude() = default;
  constexpr Amplitude(int sign, std::uint32_t half_pow)
      : negative_(sign < 0), half_pow_(half_pow) {}

  static constexpr Amplitude one() { return {}; }
  static constexpr Amplitude inv_sqrt2() { return {+1, 1}; }

  constexpr int sign() const { return negative_ ? -1 : +1; }
  constexpr std::uint32_t half_pow() const { return half_pow_; }

  constexpr Amplitude operator-() const {
    return Amplitude(negative_ ? +1 : -1, half_pow_);
  }
  constexpr Amplitude operator*(Amplitude o) const {
    return Amplitude(sign() * o.sign(), half_pow_ + o.half_pow_);
  }
  constexpr Amplitude& operator*=(Amplitude o) { return *this = *this * o; }

  /// Scales the magnitude up by sqrt(2)^steps; throws AmplitudeOverflow when
  /// the result would leave the representable range.
  Amplitude boosted(std::uint32_t steps) const;

  /// Exact sum. nullopt means the two terms cancel. Magnitudes that differ
  /// throw InexactAmplitude; equal-sign sums of (1/sqrt2)^k with k < 2 throw
  /// AmplitudeOverflow.
  static std::optional<Amplitude> add(Amplitude a, Amplitude b);

  /// Squared magnitude as an exact dyadic fraction 1/2^half_pow.
  constexpr std::uint32_t weight_exponent() const { return half_pow_; }

  double value() const;

  /// "+(1/√2)^k" / "-(1/√2)^k"; k = 0 renders as "+1" / "-1".
  std::string to_string() const;

  friend constexpr bool operator==(Amplitude, Amplitude) = default;

 private:
  bool negative_ = false;
  std::uint32_t half_pow_ = 0;
};

}  // namespace hyperent
