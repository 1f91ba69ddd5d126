#include "hyperent/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "hyperent/error.hpp"

namespace hyperent {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Number of crystals (0..m-1) the photon's lineage splits on before the first failure.
int split_depth(std::mt19937_64& rng, int crystals, double ps) {
  int d = 0;
  while (d < crystals && uniform(rng) < ps) ++d;
  return d;
}

std::uint64_t shard_count(std::uint64_t trials) { return (trials + kShardSize - 1) / kShardSize; }

template <class Fn>
void for_each_shard(std::uint64_t shards, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(shards, 1)));
  if (workers <= 1) {
    for (std::uint64_t s = 0; s < shards; ++s) fn(s);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t s = w; s < shards; s += workers) fn(s);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
  return splitmix64(splitmix64(seed) ^ (shard * 0xD1B54A32D192ED03ull));
}

double CoincidenceCounts::success_fraction() const {
  return pumps == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(pumps);
}

CoincidenceCounts simulate_stochastic(const CascadeSpec& spec, std::uint64_t n_pump, double ps,
                                      std::uint64_t seed, unsigned workers) {
  spec.validate();
  if (!(ps >= 0.0 && ps <= 1.0)) throw Error(ErrorCode::InvalidQuery, "ps must lie in [0, 1]");
  const int crystals = spec.crystals();
  const std::uint64_t shards = shard_count(n_pump);

  std::vector<CoincidenceCounts> parts(shards);
  for_each_shard(shards, workers, [&](std::uint64_t s) {
    std::mt19937_64 rng(shard_seed(seed, s));
    std::uint64_t begin = s * kShardSize;
    std::uint64_t end = std::min(n_pump, begin + kShardSize);
    CoincidenceCounts& c = parts[s];
    c.stopped_at.assign(crystals, 0);
    for (std::uint64_t i = begin; i < end; ++i) {
      int d = split_depth(rng, crystals, ps);
      if (d == crystals) {
        ++c.successes;
      } else {
        ++c.stopped_at[d];
      }
    }
    c.pumps = end - begin;
  });

  CoincidenceCounts total;
  total.stopped_at.assign(crystals, 0);
  for (const auto& c : parts) {
    total.pumps += c.pumps;
    total.successes += c.successes;
    for (int d = 0; d < crystals; ++d) total.stopped_at[d] += c.stopped_at[d];
  }
  return total;
}

MonteCarloEstimate monte_carlo_rate(int m, const SourceModel& source, std::uint64_t pulses,
                                    std::uint64_t seed, unsigned workers) {
  source.validate();
  if (m < 2) throw Error(ErrorCode::InvalidQuery, "m must be >= 2");
  if (pulses < 1) throw Error(ErrorCode::InvalidQuery, "pulses must be >= 1");
  const int crystals = m - 1;
  const std::uint64_t shards = shard_count(pulses);

  std::vector<std::vector<std::uint64_t>> hist(shards);
  for_each_shard(shards, workers, [&](std::uint64_t s) {
    std::mt19937_64 rng(shard_seed(seed, s));
    std::poisson_distribution<std::uint64_t> photons(source.mu > 0.0 ? source.mu : 1.0);
    std::uint64_t begin = s * kShardSize;
    std::uint64_t end = std::min(pulses, begin + kShardSize);
    auto& h = hist[s];
    h.assign(1, 0);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::uint64_t n = source.mu > 0.0 ? photons(rng) : 0;
      std::uint64_t r = 0;
      for (std::uint64_t k = 0; k < n; ++k) {
        if (split_depth(rng, crystals, source.ps) == crystals) ++r;
      }
      if (r >= h.size()) h.resize(r + 1, 0);
      ++h[r];
    }
  });

  MonteCarloEstimate est;
  est.pulses = pulses;
  est.pair_histogram.assign(1, 0);
  for (const auto& h : hist) {
    if (h.size() > est.pair_histogram.size()) est.pair_histogram.resize(h.size(), 0);
    for (std::size_t r = 0; r < h.size(); ++r) est.pair_histogram[r] += h[r];
  }
  est.successful_pulses = pulses - est.pair_histogram[0];
  est.fraction = static_cast<double>(est.successful_pulses) / static_cast<double>(pulses);
  est.estimate = source.rep_hz * est.fraction;
  est.std_error = source.rep_hz * std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(pulses));
  return est;
}

}  // namespace hyperent
