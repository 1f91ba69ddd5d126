#include "hyperent/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperent/error.hpp"

namespace hyperent {
namespace {

[[noreturn]] void bad_query(const std::string& what) { throw Error(ErrorCode::InvalidQuery, what); }

void check_m(int m) {
  if (m < 2) bad_query("m must be >= 2, got " + std::to_string(m));
}

void check_n(int n) {
  if (n < 0) bad_query("n must be >= 0, got " + std::to_string(n));
}

void check_ps(double ps) {
  if (!(ps >= 0.0 && ps <= 1.0)) bad_query("ps must lie in [0, 1]");
}

// k * log(x) with the convention 0 * log(0) = 0.
double xlogy(double k, double x) {
  if (k == 0.0) return 0.0;
  return k * std::log(x);
}

// k * log1p(-x), again with 0 * (-inf) = 0.
double xlog1my(double k, double x) {
  if (k == 0.0) return 0.0;
  return k * std::log1p(-x);
}

double log_binomial(int n, int r) {
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

// Exact in double up to a few hundred; log-gamma beyond that.
double binomial(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  if (n > 1000) return std::exp(log_binomial(n, r));
  r = std::min(r, n - r);
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return std::round(c);
}

double log_q(int m, double ps) { return xlogy(m - 1, ps); }

double binomial_term(int n, int r, double p) {
  double c = binomial(n, r);
  return c * std::exp(xlogy(r, p) + xlog1my(n - r, p));
}

}  // namespace

void SourceModel::validate() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) bad_query("mu must be a finite value >= 0");
  if (!(rep_hz > 0.0) || !std::isfinite(rep_hz)) bad_query("repetition rate must be > 0");
  check_ps(ps);
}

void EventQuery::validate() const {
  check_n(n);
  check_m(m);
  if (r && (*r < 0 || *r > n)) bad_query("r must satisfy 0 <= r <= n");
}

double per_photon_success(int m, double ps) {
  check_m(m);
  check_ps(ps);
  return std::pow(ps, m - 1);
}

double p_success(int n, int m, double ps) {
  check_n(n);
  double q = per_photon_success(m, ps);
  if (n == 0 || q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  return -std::expm1(n * std::log1p(-q));
}

std::vector<Scenario> p_success_scenarios(int n, int m, double ps) {
  check_n(n);
  double q = per_photon_success(m, ps);
  std::vector<Scenario> out;
  out.reserve(n + 1);
  for (int r = 0; r <= n; ++r) out.push_back({r, binomial_term(n, r, q)});
  return out;
}

std::vector<Scenario> p_failure_terms(int n, int m, double ps) {
  check_n(n);
  check_m(m);
  check_ps(ps);
  // one split on crystal 1, then at least one failure among the remaining m-2
  double partial = ps * -std::expm1(xlogy(m - 2, ps));
  std::vector<Scenario> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double c = binomial(n, i);
    out.push_back({i, c * std::exp(xlogy(i, partial) + xlog1my(n - i, ps))});
  }
  return out;
}

double pr_pairs(int m, int r, double mu, double ps) {
  check_m(m);
  check_ps(ps);
  if (r < 0) bad_query("r must be >= 0");
  if (!(mu >= 0.0)) bad_query("mu must be >= 0");
  double lq = log_q(m, ps);
  double lam = mu * std::exp(lq);
  double log_p = xlogy(r, mu) - std::lgamma(r + 1.0) - lam + r * lq;
  if (r == 0) log_p = -lam;
  return std::exp(log_p);
}

double pr_pairs(int m, int r, const SourceModel& source) {
  source.validate();
  return pr_pairs(m, r, source.mu, source.ps);
}

double n_tot(int m, const SourceModel& source) {
  source.validate();
  double q = per_photon_success(m, source.ps);
  return source.rep_hz * -std::expm1(-source.mu * q);
}

PairDistribution cascade_source_distribution(int m, const SourceModel& source, int r_max) {
  source.validate();
  check_m(m);
  if (r_max < 0) bad_query("r_max must be >= 0");
  if (r_max > 100000) bad_query("r_max must be <= 100000");

  PairDistribution dist;
  dist.terms.reserve(r_max + 1);
  for (int r = 0; r <= r_max; ++r) dist.terms.push_back({r, pr_pairs(m, r, source.mu, source.ps)});

  double lam = source.mu * per_photon_success(m, source.ps);
  int stop = r_max + 1 + static_cast<int>(lam + 40.0 * std::sqrt(lam) + 60.0);
  for (int r = r_max + 1; r <= stop; ++r) {
    double t = pr_pairs(m, r, source.mu, source.ps);
    dist.tail += t;
    if (t == 0.0 || (r > lam && t < dist.tail * 1e-17)) break;
  }
  return dist;
}

RateReport rate_report(int m, const SourceModel& source, int r_max) {
  RateReport rep;
  rep.m = m;
  rep.source = source;
  rep.n_tot = n_tot(m, source);
  rep.pulse_success_probability = rep.n_tot / source.rep_hz;
  rep.pairs = cascade_source_distribution(m, source, r_max);
  double p1 = pr_pairs(m, 1, source.mu, source.ps);
  double p2 = pr_pairs(m, 2, source.mu, source.ps);
  rep.ratio21 = p1 > 0.0 ? p2 / p1 : 0.0;
  return rep;
}

}  // namespace hyperent
