#include "hyperent/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hyperent/error.hpp"

namespace hyperent {
namespace {

// Neumaier summation; millions of tiny terms otherwise drift by ~1e-12.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct Walker {
  int n;
  int m;
  std::vector<double> outcome;     // outcome[d], d = 0..m-1
  std::vector<double> rest_total;  // rest_total[j]: mass of all outcomes of photons j..n-1
  std::vector<std::uint64_t> rest_count;
  OracleResult result;
  Accumulator success;
  Accumulator failed;

  // Photons 0..j-1 all stopped short of the last crystal.
  void walk(int j, double mass) {
    if (j == n) {
      failed.add(mass);
      ++result.outcomes;
      return;
    }
    for (int d = 0; d + 1 < m; ++d) walk(j + 1, mass * outcome[d]);
    // photon j completes: every continuation of the remaining photons is a success
    success.add(mass * outcome[m - 1] * rest_total[j + 1]);
    result.outcomes += rest_count[j + 1];
  }
};

}  // namespace

OracleResult enumerate_outcomes(int n, int m, double ps) {
  if (n < 0 || n > kOracleMaxPhotons || m < 2 || m > kOracleMaxM) {
    throw Error(ErrorCode::OracleBound, "oracle enumeration needs 0 <= n <= " +
                                            std::to_string(kOracleMaxPhotons) + " and 2 <= m <= " +
                                            std::to_string(kOracleMaxM));
  }
  if (!(ps >= 0.0 && ps <= 1.0)) throw Error(ErrorCode::InvalidQuery, "ps must lie in [0, 1]");

  Walker w{n, m, std::vector<double>(m), std::vector<double>(n + 1, 1.0),
           std::vector<std::uint64_t>(n + 1, 1), {}, {}, {}};
  double reach = 1.0;  // ps^d by repeated multiplication
  for (int d = 0; d < m; ++d) {
    w.outcome[d] = d + 1 < m ? reach * (1.0 - ps) : reach;
    reach *= ps;
  }
  double per_photon = 0.0;
  for (double p : w.outcome) per_photon += p;
  for (int j = n - 1; j >= 0; --j) {
    w.rest_total[j] = w.rest_total[j + 1] * per_photon;
    w.rest_count[j] = w.rest_count[j + 1] * static_cast<std::uint64_t>(m);
  }

  w.walk(0, 1.0);
  w.result.success = w.success.value();
  w.result.total_mass = w.success.value() + w.failed.value();
  return w.result;
}

double oracle_success(int n, int m, double ps) { return enumerate_outcomes(n, m, ps).success; }

}  // namespace hyperent
