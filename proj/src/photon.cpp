#include "hyperent/photon.hpp"

#include <algorithm>

#include "hyperent/error.hpp"

namespace hyperent {

std::string to_string(TimeBin b) {
  switch (b) {
    case TimeBin::None: return "";
    case TimeBin::T1: return "t_1";
    case TimeBin::T2: return "t_2";
  }
  return "";
}

PhotonTerm::PhotonTerm(std::vector<Photon> photons) : photons_(std::move(photons)) {
  std::sort(photons_.begin(), photons_.end());
  auto dup = std::adjacent_find(photons_.begin(), photons_.end());
  if (dup != photons_.end()) {
    throw Error(ErrorCode::DuplicateOccupancy,
                "two photons share " + render(*dup, true) + " in one term");
  }
}

PhotonTerm canonicalize(std::span<const Photon> photons) {
  return PhotonTerm(std::vector<Photon>(photons.begin(), photons.end()));
}

std::string render(const Photon& p, bool with_freq) {
  std::string out = "|";
  out += to_char(p.pol);
  out += to_string(p.bin);
  out += "⟩_{" + p.mode + "}";
  if (with_freq) out += "[ω" + std::to_string(p.freq.token()) + "]";
  return out;
}

}  // namespace hyperent
