#pragma once

#include <optional>
#include <vector>

namespace hyperent {

/// Pulsed pump with Poissonian photon number.
struct SourceModel {
  double mu = 1.0;       // mean photon number per pulse
  double rep_hz = 1e9;   // pulse repetition rate
  double ps = 7.6e-6;    // per-crystal splitting probability

  /// Throws InvalidQuery unless mu >= 0, rep_hz > 0 and 0 <= ps <= 1.
  void validate() const;
};

/// Photon-number event: n photons in the pulse, target size m, optional pair count r.
struct EventQuery {
  int n = 0;
  int m = 3;
  std::optional<int> r;

  /// Throws InvalidQuery unless n >= 0, m >= 2 and 0 <= r <= n.
  void validate() const;
};

/// Probability attached to a scenario index (pair count r, or failure index i).
struct Scenario {
  int index = 0;
  double probability = 0.0;
};

/// ps^(m-1): one photon splits on every crystal of its lineage.
double per_photon_success(int m, double ps);

/// Probability that an n-photon pulse yields at least one m-photon state:
/// 1 - (1 - ps^(m-1))^n.
double p_success(int n, int m, double ps);

/// Exactly r complete states, r = 0..n: C(n,r) q^r (1-q)^(n-r) with q = ps^(m-1).
std::vector<Scenario> p_success_scenarios(int n, int m, double ps);

/// Failure with exactly i photons split on the first crystal and none of them
/// completing: C(n,i) ps^i (1-ps^(m-2))^i (1-ps)^(n-i), i = 0..n.
std::vector<Scenario> p_failure_terms(int n, int m, double ps);

/// Poisson-marginalized probability of r pairs per pulse:
/// mu^r / r! * exp(-mu q) * q^r.
double pr_pairs(int m, int r, double mu, double ps);
double pr_pairs(int m, int r, const SourceModel& source);

/// m-photon states per second: F * (1 - exp(-mu q)).
double n_tot(int m, const SourceModel& source);

struct PairDistribution {
  std::vector<Scenario> terms;  // r = 0..r_max
  double tail = 0.0;            // mass of r > r_max
};

PairDistribution cascade_source_distribution(int m, const SourceModel& source, int r_max);

struct RateReport {
  int m = 0;
  SourceModel source;
  double n_tot = 0.0;
  double pulse_success_probability = 0.0;
  double ratio21 = 0.0;  // Pr(m,2) / Pr(m,1)
  PairDistribution pairs;
};

RateReport rate_report(int m, const SourceModel& source, int r_max);

}  // namespace hyperent
