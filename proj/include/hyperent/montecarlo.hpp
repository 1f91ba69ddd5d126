#pragma once

#include <cstdint>
#include <vector>

#include "hyperent/cascade.hpp"
#include "hyperent/rates.hpp"

namespace hyperent {

/// Trials are split into fixed-size shards, each with its own seed derived
/// from (seed, shard index). Totals do not depend on the worker count.
inline constexpr std::uint64_t kShardSize = 1u << 16;

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

struct CoincidenceCounts {
  std::uint64_t pumps = 0;
  std::uint64_t successes = 0;
  /// stopped_at[d]: pump photons whose lineage split on exactly d crystals
  /// before failing, d = 0..m-2.
  std::vector<std::uint64_t> stopped_at;

  double success_fraction() const;
  friend bool operator==(const CoincidenceCounts&, const CoincidenceCounts&) = default;
};

/// Bernoulli-chain model of the cascade: every pump photon succeeds iff it
/// splits on all m-1 crystals of its path.
CoincidenceCounts simulate_stochastic(const CascadeSpec& spec, std::uint64_t n_pump, double ps,
                                      std::uint64_t seed, unsigned workers = 0);

struct MonteCarloEstimate {
  double estimate = 0.0;   // pairs per second
  double std_error = 0.0;  // binomial standard error, same units
  double fraction = 0.0;   // successful pulses / pulses
  std::uint64_t pulses = 0;
  std::uint64_t successful_pulses = 0;
  /// pair_histogram[r]: pulses with exactly r complete m-photon states.
  std::vector<std::uint64_t> pair_histogram;

  friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

MonteCarloEstimate monte_carlo_rate(int m, const SourceModel& source, std::uint64_t pulses,
                                    std::uint64_t seed, unsigned workers = 0);

}  // namespace hyperent
