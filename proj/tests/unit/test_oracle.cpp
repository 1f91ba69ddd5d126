#include <gtest/gtest.h>

#include <cmath>

#include "hyperent/error.hpp"
#include "hyperent/oracle.hpp"
#include "hyperent/rates.hpp"

using namespace hyperent;

TEST(Oracle, SmallCases) {
  EXPECT_NEAR(oracle_success(2, 3, 0.5), 0.4375, 1e-15);
  EXPECT_NEAR(oracle_success(3, 3, 0.5), 0.578125, 1e-15);
  EXPECT_NEAR(oracle_success(1, 2, 0.3), 0.3, 1e-15);
  EXPECT_NEAR(oracle_success(3, 4, 0.2), p_success(3, 4, 0.2), 1e-12);
  EXPECT_EQ(oracle_success(0, 3, 0.5), 0.0);
}

TEST(Oracle, MatchesClosedFormOnGrid) {
  for (double ps : {0.05, 0.2, 0.5, 0.9}) {
    for (int m = 2; m <= 6; ++m) {
      for (int n = 0; n <= 8; ++n) {
        OracleResult o = enumerate_outcomes(n, m, ps);
        EXPECT_NEAR(o.success, p_success(n, m, ps), 1e-12) << n << " " << m << " " << ps;
        EXPECT_NEAR(o.total_mass, 1.0, 1e-12);
        EXPECT_EQ(o.outcomes, static_cast<std::uint64_t>(std::llround(std::pow(m, n))));
      }
    }
  }
}

TEST(Oracle, Bounds) {
  for (auto [n, m] : {std::pair{13, 3}, std::pair{20, 3}, std::pair{3, 8}, std::pair{-1, 3}, std::pair{2, 1}}) {
    try {
      enumerate_outcomes(n, m, 0.5);
      FAIL() << n << " " << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OracleBound);
    }
  }
}
