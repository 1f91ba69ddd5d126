#pragma once

#include <random>
#include <string>
#include <vector>

#include "hyperent/state.hpp"

namespace hyperent::test {

inline constexpr Polarization H = Polarization::H;
inline constexpr Polarization V = Polarization::V;

inline Photon ph(Polarization p, const std::string& mode, TimeBin bin = TimeBin::None,
                 FrequencyTag f = FrequencyTag::pump()) {
  return Photon{p, mode, bin, f};
}

inline FrequencyTag tok(std::uint64_t t) { return FrequencyTag::from_token(t); }

inline PhotonState ket(std::vector<Photon> photons, Amplitude amp = Amplitude::one()) {
  return PhotonState::single(std::move(photons), amp);
}

inline PhotonState sum(std::initializer_list<std::pair<std::vector<Photon>, Amplitude>> terms) {
  PhotonState s;
  for (const auto& [photons, amp] : terms) s.add(PhotonTerm(photons), amp);
  return s;
}

inline constexpr Amplitude half{+1, 2};
inline constexpr Amplitude inv_sqrt2{+1, 1};

}  // namespace hyperent::test
