#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hyperent/state.hpp"

namespace hyperent {

/// Half-wave plate acting on every photon in the listed modes.
/// Only 22.5 and 45 degrees keep amplitudes exact.
struct Hwp {
  double angle_deg = 45.0;
  std::vector<Mode> modes;
};

struct PbsPort {
  Mode in;
  Mode h_out;  // transmitted
  Mode v_out;  // reflected
};

struct Pbs {
  std::vector<PbsPort> ports;
  /// Reject photons outside the declared input modes.
  bool strict = false;
};

/// 50:50 beam splitter. The only place the sign convention is chosen:
/// in1 -> (out1 + out2)/√2, in2 -> (out1 - out2)/√2.
struct Npbs {
  Mode in1;
  Mode in2;
  Mode out1;
  Mode out2;
};

/// Dichroic mirror: separates pump light from down-converted light.
struct DmPort {
  Mode in;
  Mode pump_out;
  Mode downconverted_out;
};

struct Dm {
  std::vector<DmPort> ports;
};

/// One traversal direction through a crystal: the pair exits in `out`.
struct CrystalRoute {
  Mode in;
  Mode out;
};

/// Nonlinear crystal in the ideal conversion limit. An H photon entering on a
/// route becomes an (H, V) pair on the route's exit; V photons are not phase
/// matched and pass unchanged. All routes act simultaneously.
struct Crystal {
  int id = 1;
  std::vector<CrystalRoute> routes;
  unsigned max_input_depth = FrequencyTag::kMaxDepth - 1;
};

struct LongPass {
  std::vector<Mode> modes;
};

/// Unbalanced-interferometer arms: photons in the short arm get t_1, photons
/// in the long arm get t_2. Equal outputs merge both arms into one mode.
struct DelayTagger {
  Mode short_in;
  Mode long_in;
  Mode short_out;
  Mode long_out;
};

using ElementKind = std::variant<Hwp, Pbs, Npbs, Dm, Crystal, LongPass, DelayTagger>;

struct OpticalElement {
  std::string label;
  ElementKind kind;
};

PhotonState apply_hwp(const PhotonState& state, std::span<const Mode> modes, double angle_deg);
PhotonState apply_hwp(const PhotonState& state, const Mode& mode, double angle_deg);

PhotonState apply_pbs(const PhotonState& state, const Pbs& pbs);

PhotonState apply_npbs(const PhotonState& state, const Mode& in1, const Mode& in2, const Mode& out1,
                       const Mode& out2);

PhotonState apply_crystal(const PhotonState& state, const Crystal& crystal);
/// Single in-place route, for callers that do not need a separate exit port.
PhotonState apply_crystal(const PhotonState& state, const Mode& mode, int crystal_id);

PhotonState apply_dm(const PhotonState& state, const Dm& dm);

struct LongPassResult {
  PhotonState state;
  std::size_t removed_terms = 0;
};

/// Deletes terms with pump light in a filtered mode. Amplitudes of the
/// surviving terms are left as they are.
LongPassResult apply_longpass(const PhotonState& state, std::span<const Mode> modes);
PhotonState apply_longpass(const PhotonState& state, const Mode& mode);

PhotonState apply_delay_tagger(const PhotonState& state, const DelayTagger& tagger);
PhotonState apply_delay_tagger(const PhotonState& state, const Mode& short_mode,
                               const Mode& long_mode, const Mode& out_mode);

/// Dispatches on the element kind; `removed_terms` accumulates long-pass deletions.
PhotonState apply(const OpticalElement& element, const PhotonState& state,
                  std::size_t* removed_terms = nullptr);

/// Modes the element reads from and writes to, for wiring checks.
std::vector<Mode> input_modes(const ElementKind& kind);
std::vector<Mode> output_modes(const ElementKind& kind);

/// One-line description, e.g. "PBS a:H->a_4,V->a_3".
std::string describe(const OpticalElement& element);

}  // namespace hyperent
