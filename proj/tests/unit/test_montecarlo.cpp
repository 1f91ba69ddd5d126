#include <gtest/gtest.h>

#include <cmath>

#include "hyperent/montecarlo.hpp"

using namespace hyperent;

namespace {

double z_score(double got, double want, double p, double trials) {
  return (got - want) / std::sqrt(p * (1 - p) / trials);
}

}  // namespace

TEST(Stochastic, CertaintyLimits) {
  CascadeSpec spec{Scheme::PolSpatial, 4};
  CoincidenceCounts all = simulate_stochastic(spec, 100000, 1.0, 1);
  EXPECT_EQ(all.successes, 100000u);
  EXPECT_EQ(all.success_fraction(), 1.0);
  CoincidenceCounts none = simulate_stochastic(spec, 100000, 0.0, 1);
  EXPECT_EQ(none.successes, 0u);
  EXPECT_EQ(none.stopped_at[0], 100000u);
}

TEST(Stochastic, MatchesSinglePhotonClosedForm) {
  CoincidenceCounts c = simulate_stochastic({Scheme::PolSpatial, 3}, 1000000, 0.3, 11);
  EXPECT_LE(std::abs(z_score(c.success_fraction(), 0.09, 0.09, 1e6)), 3.0);
  // first-failure depths follow ps^d (1 - ps)
  EXPECT_LE(std::abs(z_score(c.stopped_at[0] / 1e6, 0.7, 0.7, 1e6)), 3.0);
  EXPECT_LE(std::abs(z_score(c.stopped_at[1] / 1e6, 0.21, 0.21, 1e6)), 3.0);
}

TEST(Stochastic, DeskGrid) {
  for (double ps : {0.2, 0.5, 0.9}) {
    for (int m : {2, 3, 5}) {
      double q = p_success(1, m, ps);
      CoincidenceCounts c = simulate_stochastic({Scheme::PolTimeBin, m}, 200000, ps, 5);
      EXPECT_LE(std::abs(z_score(c.success_fraction(), q, q, 2e5)), 3.5) << ps << " " << m;
    }
  }
}

TEST(Stochastic, DeterministicAndWorkerIndependent) {
  CascadeSpec spec{Scheme::PolSpatial, 3};
  CoincidenceCounts a = simulate_stochastic(spec, 300000, 0.4, 99, 1);
  CoincidenceCounts b = simulate_stochastic(spec, 300000, 0.4, 99, 3);
  CoincidenceCounts c = simulate_stochastic(spec, 300000, 0.4, 99, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, simulate_stochastic(spec, 300000, 0.4, 100, 1));
}

TEST(MonteCarlo, DeskScaleRate) {
  SourceModel s{1.0, 1.0, 0.05};
  MonteCarloEstimate e = monte_carlo_rate(3, s, 1000000, 42);
  double target = -std::expm1(-0.0025);
  EXPECT_LE(std::abs(e.estimate - target), 3 * e.std_error);
  EXPECT_EQ(e.pulses, 1000000u);
  std::uint64_t total = 0;
  for (auto h : e.pair_histogram) total += h;
  EXPECT_EQ(total, e.pulses);
}

TEST(MonteCarlo, CertaintyLimit) {
  SourceModel s{30.0, 1e9, 1.0};
  MonteCarloEstimate e = monte_carlo_rate(4, s, 20000, 3);
  EXPECT_EQ(e.fraction, 1.0);
  EXPECT_EQ(e.estimate, 1e9);
  EXPECT_EQ(e.std_error, 0.0);
}

TEST(MonteCarlo, EveryNonEmptyPulseSucceedsAtUnitSplitting) {
  SourceModel s{1.0, 1.0, 1.0};
  MonteCarloEstimate e = monte_carlo_rate(3, s, 100000, 8);
  // pulses without photons are the only failures
  EXPECT_LE(std::abs(z_score(1 - e.fraction, std::exp(-1.0), std::exp(-1.0), 1e5)), 3.0);
}

TEST(MonteCarlo, SingleTrial) {
  MonteCarloEstimate e = monte_carlo_rate(3, SourceModel{1.0, 1.0, 0.05}, 1, 42);
  EXPECT_EQ(e.pulses, 1u);
  EXPECT_TRUE(std::isfinite(e.std_error));
}

TEST(MonteCarlo, Deterministic) {
  SourceModel s{2.0, 1e3, 0.3};
  EXPECT_EQ(monte_carlo_rate(3, s, 200000, 7, 1), monte_carlo_rate(3, s, 200000, 7, 4));
  EXPECT_EQ(monte_carlo_rate(3, s, 200000, 7), monte_carlo_rate(3, s, 200000, 7));
}

TEST(MonteCarlo, CoverageAcrossSeeds) {
  int inside = 0, runs = 0;
  for (double mu : {0.5, 2.0}) {
    for (double ps : {0.1, 0.4}) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SourceModel s{mu, 1.0, ps};
        MonteCarloEstimate e = monte_carlo_rate(3, s, 20000, seed);
        double target = n_tot(3, s);
        inside += std::abs(e.estimate - target) <= 3 * e.std_error;
        ++runs;
      }
    }
  }
  EXPECT_GE(inside, static_cast<int>(std::ceil(0.95 * runs)));
}

TEST(Sharding, SeedsDiffer) {
  EXPECT_NE(shard_seed(1, 0), shard_seed(1, 1));
  EXPECT_NE(shard_seed(1, 0), shard_seed(2, 0));
  EXPECT_EQ(shard_seed(5, 9), shard_seed(5, 9));
}
