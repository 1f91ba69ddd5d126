#include <gtest/gtest.h>

#include <cmath>

#include "hyperent/error.hpp"
#include "hyperent/rates.hpp"

using namespace hyperent;

namespace {

constexpr double kGrid[] = {0.05, 0.2, 0.5, 0.9};
const SourceModel kPaper{1.0, 1e9, 7.6e-6};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Poisson pmf by recurrence, independent of the library's log-gamma path.
std::vector<double> poisson_pmf(double mu, int n_max) {
  std::vector<double> p(n_max + 1);
  p[0] = std::exp(-mu);
  for (int n = 1; n <= n_max; ++n) p[n] = p[n - 1] * mu / n;
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hyperent::Error thrown";
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST(PSuccess, ExplicitPolynomials) {
  for (double p : kGrid) {
    EXPECT_NEAR(p_success(2, 3, p), 2 * p * p - std::pow(p, 4), 1e-12);
    EXPECT_NEAR(p_success(3, 3, p), 3 * p * p - 3 * std::pow(p, 4) + std::pow(p, 6), 1e-12);
    EXPECT_NEAR(p_success(2, 4, p), 2 * std::pow(p, 3) - std::pow(p, 6), 1e-12);
    EXPECT_NEAR(p_success(3, 4, p), 3 * std::pow(p, 3) - 3 * std::pow(p, 6) + std::pow(p, 9), 1e-12);
  }
}

TEST(PSuccess, EmptyPulseAndLimits) {
  EXPECT_EQ(p_success(0, 3, 0.7), 0.0);
  EXPECT_EQ(p_success(5, 3, 0.0), 0.0);
  EXPECT_EQ(p_success(5, 3, 1.0), 1.0);
  EXPECT_NEAR(p_success(1, 2, 0.3), 0.3, 1e-15);
}

TEST(PSuccess, GeneralFormSpecializations) {
  for (double p : kGrid) {
    for (int n = 0; n <= 10; ++n) {
      EXPECT_NEAR(p_success(n, 3, p), 1 - std::pow(1 - p * p, n), 1e-12);
      EXPECT_NEAR(p_success(n, 4, p), 1 - std::pow(1 - p * p * p, n), 1e-12);
    }
  }
}

TEST(PSuccess, TinyProbabilitiesKeepPrecision) {
  // n q with q = 5.776e-11 must not round to zero
  EXPECT_NEAR(p_success(2, 3, 7.6e-6) / (2 * 7.6e-6 * 7.6e-6), 1.0, 1e-9);
}

TEST(Scenarios, PaperValues) {
  for (double p : kGrid) {
    EXPECT_NEAR(p_success_scenarios(2, 3, p)[2].probability, std::pow(p, 4), 1e-14);
    EXPECT_NEAR(p_success_scenarios(3, 4, p)[3].probability, std::pow(p, 9), 1e-14);
  }
}

TEST(Scenarios, CompletenessAndConsistency) {
  for (double p : kGrid) {
    for (int m = 2; m <= 6; ++m) {
      for (int n = 0; n <= 8; ++n) {
        auto scen = p_success_scenarios(n, m, p);
        auto fail = p_failure_terms(n, m, p);
        ASSERT_EQ(scen.size(), static_cast<std::size_t>(n + 1));
        double all = 0, positive = 0, failed = 0;
        for (const auto& s : scen) {
          all += s.probability;
          if (s.index >= 1) positive += s.probability;
        }
        for (const auto& f : fail) failed += f.probability;
        EXPECT_NEAR(all, 1.0, 1e-12);
        EXPECT_NEAR(positive, p_success(n, m, p), 1e-12);
        EXPECT_NEAR(p_success(n, m, p) + failed, 1.0, 1e-12);
      }
    }
  }
}

TEST(FailureTerms, PaperValues) {
  for (double p : kGrid) {
    auto f = p_failure_terms(2, 3, p);
    EXPECT_NEAR(f[0].probability + f[1].probability + f[2].probability, 1 - 2 * p * p + std::pow(p, 4), 1e-12);
    EXPECT_NEAR(p_failure_terms(3, 3, p)[0].probability, std::pow(1 - p, 3), 1e-14);
  }
  double total = 0;
  for (const auto& t : p_failure_terms(4, 5, 0.0)) total += t.probability;
  EXPECT_EQ(total, 1.0);
}

TEST(PrPairs, RatioAtPaperPoint) {
  double ratio = pr_pairs(3, 2, kPaper) / pr_pairs(3, 1, kPaper);
  EXPECT_LT(rel(ratio, 2.888e-11), 0.01);
  EXPECT_NEAR(ratio, 1.0 * 7.6e-6 * 7.6e-6 / 2, 1e-20);
}

TEST(PrPairs, NoConversionLimit) {
  EXPECT_EQ(pr_pairs(3, 0, 1.0, 0.0), 1.0);
  EXPECT_NEAR(pr_pairs(3, 0, 2.0, 1e-9), 1.0, 1e-15);
}

TEST(PrPairs, MatchesPhotonNumberSeries) {
  const double mu = 1.0, ps = 0.5, q = ps * ps;
  auto pn = poisson_pmf(mu, 60);
  double series = 0;
  for (int n = 1; n <= 60; ++n) series += pn[n] * n * q * std::pow(1 - q, n - 1);
  EXPECT_NEAR(pr_pairs(3, 1, mu, ps), series, 1e-14);
}

TEST(PrPairs, PoissonMarginalization) {
  for (double mu : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    for (double ps : {1e-3, 0.05, 0.2, 0.5, 0.9}) {
      for (int m : {2, 3, 4, 6}) {
        auto pn = poisson_pmf(mu, 200);
        double total = 0;
        for (int n = 0; n <= 200; ++n) total += pn[n] * p_success(n, m, ps);
        EXPECT_NEAR(total, 1 - std::exp(-mu * std::pow(ps, m - 1)), 1e-10);
      }
    }
  }
}

TEST(NTot, QuotedRates) {
  auto at = [](double mu, int m) { return n_tot(m, SourceModel{mu, 1e9, 7.6e-6}); };
  EXPECT_LT(rel(at(0.5, 3), 2.89e-2), 0.01);
  EXPECT_LT(rel(at(1.0, 3), 5.78e-2), 0.01);
  EXPECT_LT(rel(at(2.0, 3), 1.16e-1), 0.01);
  EXPECT_LT(rel(at(4.0, 3), 2.31e-1), 0.01);
  // formula value; the quoted 4.44e-7 is about 1.1% higher
  EXPECT_NEAR(at(1.0, 4), 1e9 * 7.6e-6 * 7.6e-6 * 7.6e-6, 1e-12);
  EXPECT_LT(rel(at(1.0, 4), 4.44e-7), 0.02);
}

TEST(NTot, ZeroMeanPhotonNumber) { EXPECT_EQ(n_tot(3, SourceModel{0.0, 1e9, 0.5}), 0.0); }

TEST(NTot, Monotonicity) {
  for (int m = 2; m <= 8; ++m) {
    double prev = 0;
    for (double mu : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      double v = n_tot(m, SourceModel{mu, 1e9, 7.6e-6});
      EXPECT_GT(v, prev);
      prev = v;
    }
    double prev_ps = 0;
    for (double ps : {1e-6, 1e-4, 0.01, 0.3, 0.9}) {
      double v = n_tot(m, SourceModel{1.0, 1e9, ps});
      EXPECT_GT(v, prev_ps);
      prev_ps = v;
    }
  }
  for (double ps : {7.6e-6, 0.2, 0.9}) {
    for (int m = 3; m <= 8; ++m) {
      EXPECT_LT(n_tot(m, SourceModel{1.0, 1e9, ps}), n_tot(m - 1, SourceModel{1.0, 1e9, ps}));
    }
  }
}

TEST(Distribution, TermsAndTail) {
  SourceModel s{1.0, 1.0, 0.5};
  PairDistribution d = cascade_source_distribution(3, s, 3);
  ASSERT_EQ(d.terms.size(), 4u);
  EXPECT_DOUBLE_EQ(d.terms[0].probability, std::exp(-0.25));
  double total = d.tail;
  for (const auto& t : d.terms) total += t.probability;
  EXPECT_NEAR(total, 1.0, 1e-12);

  PairDistribution wide = cascade_source_distribution(3, s, 12);
  EXPECT_LT(wide.tail, 1e-15);
  double sum = 0;
  for (const auto& t : wide.terms) sum += t.probability;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Distribution, PaperPointDominatedByVacuum) {
  PairDistribution d = cascade_source_distribution(3, kPaper, 2);
  EXPECT_LT(rel(1 - d.terms[0].probability, 5.776e-11), 1e-3);
  EXPECT_LT(rel(-std::expm1(-7.6e-6 * 7.6e-6), 5.776e-11), 1e-9);
}

TEST(RateReport, Fields) {
  RateReport r = rate_report(3, kPaper, 4);
  EXPECT_EQ(r.n_tot, n_tot(3, kPaper));
  EXPECT_NEAR(r.pulse_success_probability, r.n_tot / 1e9, 1e-25);
  EXPECT_LT(rel(r.ratio21, 2.888e-11), 0.01);
  EXPECT_EQ(r.pairs.terms.size(), 5u);
}

TEST(Validation, BadInputs) {
  EXPECT_EQ(code_of([] { p_success(2, 1, 0.5); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { p_success(-1, 3, 0.5); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { p_success(2, 3, 1.5); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { n_tot(3, SourceModel{-1.0, 1e9, 0.1}); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { n_tot(3, SourceModel{1.0, 0.0, 0.1}); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { pr_pairs(3, -1, 1.0, 0.1); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { cascade_source_distribution(3, kPaper, -1); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { EventQuery{3, 3, 4}.validate(); }), ErrorCode::InvalidQuery);
  EXPECT_NO_THROW((EventQuery{3, 3, 3}.validate()));
}
