#pragma once

#include <cstdint>

namespace hyperent {

inline constexpr int kOracleMaxPhotons = 12;
inline constexpr int kOracleMaxM = 7;

struct OracleResult {
  double success = 0.0;     // mass of outcomes where some photon completes
  double total_mass = 0.0;  // should be 1
  std::uint64_t outcomes = 0;
};

/// Exhaustive enumeration of every joint per-photon outcome. A photon's
/// outcome is the number d of consecutive crystals it splits on before the
/// first failure (d = m-1 means it completed the cascade). Throws OracleBound
/// outside n <= 12, m <= 7.
OracleResult enumerate_outcomes(int n, int m, double ps);

double oracle_success(int n, int m, double ps);

}  // namespace hyperent
