#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperent/elements.hpp"

namespace hyperent {

enum class Scheme { PolSpatial, PolTimeBin };

std::string_view to_string(Scheme s);
/// Accepts "pol-spatial" / "pol-time-bin"; throws InvalidSpec otherwise.
Scheme parse_scheme(std::string_view text);

/// Which photons of the cascade get converted: node k of a binary heap
/// (node 1 is the pump) is converted by crystal k, so m photons need
/// crystals 1..m-1 and the leaves are nodes m..2m-1.
struct CascadeSpec {
  static constexpr int kMaxPhotons = 256;

  Scheme scheme = Scheme::PolSpatial;
  int m = 3;

  /// Throws InvalidSpec unless 2 <= m <= kMaxPhotons.
  void validate() const;
  int crystals() const { return m - 1; }
};

/// Mode names for one heap node. Spatial scheme: branch 0 is the a/d family,
/// branch 1 the b/c family. Time-bin scheme has a single branch.
Mode node_mode(const CascadeSpec& spec, int branch, int node);

/// Output photons in display order, e.g. d_2 d_1 a_2 for the spatial m = 3
/// branch, or b_1 a_1 b for the time-bin m = 3 cascade.
std::vector<int> display_leaf_order(const CascadeSpec& spec);

struct Circuit {
  CascadeSpec spec;
  std::vector<OpticalElement> elements;
  Mode input_mode;
  std::vector<Mode> output_modes;
  /// Ports through which light leaves the verified part of the setup
  /// (the unused interferometer output of the time-bin scheme).
  std::vector<Mode> discard_modes;
  /// Unused beam-splitter inputs that only ever carry vacuum.
  std::vector<Mode> vacuum_ports;
  /// Index one past the last element of each conversion stage (crystal k ends stage k).
  std::vector<std::size_t> stage_ends;

  std::size_t crystal_count() const;
  std::size_t count_if_kind(std::size_t variant_index) const;

  /// Throws InvalidSpec if an element reads a mode no earlier element produced.
  void validate() const;

  /// Deterministic listing, one element per line.
  std::string describe() const;
};

Circuit build_cascade(const CascadeSpec& spec);

/// |H⟩ in the circuit input mode carrying the pump frequency.
PhotonState pump_state(const Circuit& circuit);

struct SymbolicRun {
  PhotonState state;
  std::size_t elements_applied = 0;
  std::size_t longpass_removed_terms = 0;
};

/// Folds the first `element_count` elements (all by default) over the input state.
SymbolicRun run_symbolic(const Circuit& circuit, const PhotonState& input,
                         std::optional<std::size_t> element_count = std::nullopt);

PhotonState simulate_symbolic(const Circuit& circuit, const PhotonState& input);

/// Closed-form target: the polarization GHZ pair tensored with the spatial
/// (or time-bin) GHZ pair over the output modes, 1/2 per term. Frequency
/// labels follow the conversion tree.
PhotonState expected_state(const CascadeSpec& spec);

/// Slot patterns of the two spatial/time-bin branches in display order.
struct BranchPatterns {
  std::vector<Slot> branch_a;
  std::vector<Slot> branch_b;
  std::vector<std::string> polarizations;  // the two alternating patterns, sorted
};
BranchPatterns branch_patterns(const CascadeSpec& spec);

/// Output of the verified part of the circuit: discard ports removed and the
/// remaining state renormalized exactly.
struct VerifiedOutput {
  PhotonState state;
  DyadicSum discarded_weight;
  std::size_t discarded_terms = 0;
};
VerifiedOutput verified_output(const Circuit& circuit, const PhotonState& full_output);

/// Renders a state matching branch_patterns(spec) in factored form, e.g.
/// "+(1/√2)^2 (|HVH⟩+|VHV⟩)⊗(|c_2c_1b_2⟩+|d_2d_1a_2⟩)". Returns nullopt when
/// the state does not factor that way.
std::optional<std::string> render_factored(const PhotonState& state, const CascadeSpec& spec);

}  // namespace hyperent
