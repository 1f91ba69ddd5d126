#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperent/amplitude.hpp"
#include "hyperent/photon.hpp"

namespace hyperent {

/// Exact sum of terms 2^-k, kept as a binary expansion so that norm checks
/// are decidable without floating point.
class DyadicSum {
 public:
  void add_power(std::int32_t k);  // += 2^-k
  bool is_one() const;
  bool is_zero() const { return bits_.empty(); }
  /// Returns j when the sum equals exactly 2^-j.
  std::optional<std::int32_t> as_power() const;
  double value() const;

  friend bool operator==(const DyadicSum&, const DyadicSum&) = default;

 private:
  void carry();
  std::map<std::int32_t, std::uint64_t> bits_;  // exponent -> multiplicity
};

/// Pure superposition with exact amplitudes; zero amplitudes are never stored.
class PhotonState {
 public:
  using TermMap = std::map<PhotonTerm, Amplitude>;

  PhotonState() = default;
  static PhotonState single(std::vector<Photon> photons, Amplitude amp = Amplitude::one());

  /// Adds amp to the coefficient of term; exact cancellation erases it.
  void add(const PhotonTerm& term, Amplitude amp);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  PhotonState negated() const;
  /// Multiplies every amplitude by sqrt(2)^steps.
  PhotonState boosted(std::uint32_t steps) const;

  DyadicSum norm_squared() const;
  bool is_normalized() const { return norm_squared().is_one(); }

  friend bool operator==(const PhotonState&, const PhotonState&) = default;

 private:
  TermMap terms_;
};

PhotonState add_term(PhotonState state, const PhotonTerm& term, Amplitude amp);

bool states_equal(const PhotonState& a, const PhotonState& b, bool up_to_global_phase = true);

/// Copy of the state with every frequency label reset to the pump token, for
/// comparisons that only concern polarization, mode and time bin.
PhotonState strip_frequency(const PhotonState& state);

struct Restriction {
  PhotonState kept;
  DyadicSum discarded_weight;
  std::size_t discarded_terms = 0;
};

/// Drops every term with a photon in one of the listed modes.
Restriction restrict_excluding(const PhotonState& state, std::span<const Mode> modes);

/// Rescales a state whose squared norm is exactly 2^-j back to unit norm.
/// Throws InexactAmplitude when the norm is not of that form.
PhotonState renormalized(const PhotonState& state);

/// One position of a GHZ product pattern.
struct Slot {
  Mode mode;
  TimeBin bin = TimeBin::None;
};

/// Builds (P1 + P2) ⊗ (A + B) with amplitude 1/2 per term, where each
/// polarization string assigns a polarization to the matching slot.
PhotonState ghz_product(std::span<const std::string> pol_patterns,
                        std::span<const Slot> branch_a, std::span<const Slot> branch_b);

/// True iff the state (frequency labels ignored) equals ghz_product(...) up to
/// global phase. Throws PatternArity when the pattern lengths disagree.
bool tensor_factor_check(const PhotonState& state, std::span<const std::string> pol_patterns,
                         std::span<const Slot> branch_a, std::span<const Slot> branch_b);

/// Energy bookkeeping for one term: the frequency tokens must be prefix free
/// and their Kraft sum must equal the number of pump roots, i.e. the leaves of
/// full binary trees rooted at the pump.
bool frequency_forest_ok(const PhotonTerm& term, std::uint32_t pump_roots = 1);

struct RenderOptions {
  bool with_freq = false;
};

/// Canonical text: one term per line, "±(1/√2)^k |..⟩_{..}|..⟩_{..}".
std::string render(const PhotonState& state, RenderOptions opts = {});

}  // namespace hyperent
