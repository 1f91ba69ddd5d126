#include <gtest/gtest.h>

#include <cmath>

#include "hyperent/error.hpp"
#include "hyperent/report.hpp"

using namespace hyperent;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hyperent::Error thrown";
  return ErrorCode::InvalidSpec;
}

RunConfig cfg() { return RunConfig{}; }

}  // namespace

TEST(Format, Scientific) {
  EXPECT_EQ(format_sci(5.775977e-2), "5.77598e-02");
  EXPECT_EQ(format_sci(-1.5), "-1.50000e+00");
  EXPECT_EQ(format_sci(0.0), "0.00000e+00");
  EXPECT_EQ(format_sci(NAN), "nan");
}

TEST(Format, CsvQuoting) {
  EXPECT_EQ(csv_quote("plain"), "plain");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_quote("two\nlines"), "\"two\nlines\"");
}

TEST(Config, ParseLists) {
  EXPECT_EQ(parse_mu_list("0.5,1,2,4"), (std::vector<double>{0.5, 1, 2, 4}));
  EXPECT_EQ(parse_m_range("3..8"), (std::pair{3, 8}));
  EXPECT_EQ(parse_m_range("5"), (std::pair{5, 5}));
  EXPECT_EQ(code_of([] { parse_mu_list("1,,2"); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { parse_m_range("3..x"); }), ErrorCode::InvalidQuery);
}

TEST(Config, FlagsOverrideFile) {
  nlohmann::json file = {{"m", 4}, {"mu", 2.0}, {"ps", 0.1}, {"format", "json"}, {"seed", 9}};
  nlohmann::json flags = {{"m", "5"}, {"seed", "11"}};
  ResolvedConfig rc = resolve_config(file, flags);
  EXPECT_EQ(rc.run.m, 5);
  EXPECT_EQ(rc.run.mu, 2.0);
  EXPECT_EQ(rc.run.ps, 0.1);
  EXPECT_EQ(rc.run.seed, 11u);
  EXPECT_EQ(rc.run.format, OutputFormat::Json);
  EXPECT_FALSE(rc.m_is_range);
}

TEST(Config, SweepRangesAndDefaults) {
  ResolvedConfig d = resolve_config(nullptr, nlohmann::json::object());
  EXPECT_EQ(d.sweep.mu_list, (std::vector<double>{0.5, 1, 2, 4}));
  EXPECT_EQ(d.sweep.m_first, 3);
  EXPECT_EQ(d.sweep.m_last, 8);
  EXPECT_EQ(d.run.format, OutputFormat::Text);

  ResolvedConfig rc = resolve_config({{"m", {2, 4}}, {"mu", {1, 3}}}, {{"mu", "0.5,2"}});
  EXPECT_TRUE(rc.m_is_range);
  EXPECT_TRUE(rc.mu_is_list);
  EXPECT_EQ(rc.sweep.m_last, 4);
  EXPECT_EQ(rc.sweep.mu_list, (std::vector<double>{0.5, 2}));
}

TEST(Config, Rejections) {
  EXPECT_EQ(code_of([] { resolve_config({{"bogus", 1}}, nullptr); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { resolve_config(nullptr, {{"format", "xml"}}); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { resolve_config(nullptr, {{"m", "three"}}); }), ErrorCode::InvalidQuery);
  EXPECT_EQ(code_of([] { resolve_config(nullptr, {{"scheme", "pol-orbital"}}); }), ErrorCode::InvalidSpec);
}

TEST(Verify, SpatialThreePhotons) {
  Report r = cmd_verify(cfg());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.results["rendered"], "+(1/√2)^2 (|HVH⟩+|VHV⟩)⊗(|c_2c_1b_2⟩+|d_2d_1a_2⟩)");
  EXPECT_EQ(r.results["crystals"], 2);
  EXPECT_EQ(r.results["longPassModes"], 6);
  EXPECT_TRUE(r.results["energyConservation"].get<bool>());
  EXPECT_EQ(r.table.rows.size(), 4u);
}

TEST(Verify, TimeBinFourPhotons) {
  RunConfig c = cfg();
  c.scheme = Scheme::PolTimeBin;
  c.m = 4;
  Report r = cmd_verify(c);
  EXPECT_TRUE(r.results["match"].get<bool>());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Verify, SinglePhotonIsInvalid) {
  RunConfig c = cfg();
  c.m = 1;
  EXPECT_EQ(code_of([&] { cmd_verify(c); }), ErrorCode::InvalidSpec);
}

TEST(Rates, QuotedRowsAndErratum) {
  RunConfig c = cfg();
  Report r3 = cmd_rates(c);
  EXPECT_NEAR(r3.results["nTot"].get<double>(), 5.776e-2, 1e-5);
  EXPECT_TRUE(r3.notes.empty());
  EXPECT_EQ(r3.exit_code(), 0);
  c.m = 4;
  Report r4 = cmd_rates(c);
  EXPECT_EQ(r4.exit_code(), 0);
  ASSERT_EQ(r4.notes.size(), 1u);
  EXPECT_NE(r4.notes[0].find("4.44e-07"), std::string::npos);
  EXPECT_NEAR(r4.results["quoted"]["relativeDifference"].get<double>(), 0.0113, 5e-4);
}

TEST(Pairs, ScenarioTables) {
  RunConfig c = cfg();
  c.n = 3;
  c.ps = 0.5;
  c.r = 2;
  Report r = cmd_pairs(c);
  EXPECT_NEAR(r.results["pSuccess"].get<double>(), 0.578125, 1e-15);
  EXPECT_NEAR(r.results["pExactlyR"].get<double>(), 3 * std::pow(0.25, 2) * 0.75, 1e-15);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.table.rows.size(), 8u);
}

TEST(Sweep, PaperGrid) {
  ResolvedConfig rc = resolve_config(nullptr, nlohmann::json::object());
  Report r = cmd_sweep(rc.sweep, rc.run);
  ASSERT_EQ(r.results["rows"].size(), 24u);
  EXPECT_EQ(r.exit_code(), 0);
  // mu outer, m inner: row 6 is (mu=1, m=3)
  const auto& row = r.results["rows"][6];
  EXPECT_EQ(row["mu"].get<double>(), 1.0);
  EXPECT_EQ(row["m"].get<int>(), 3);
  EXPECT_NEAR(row["log10NTot"].get<double>(), -1.238, 1e-3);
}

TEST(Sweep, InvalidSpec) {
  SweepSpec s;
  s.m_first = 1;
  EXPECT_EQ(code_of([&] { cmd_sweep(s, cfg()); }), ErrorCode::InvalidQuery);
  s = SweepSpec{};
  s.mu_list.clear();
  EXPECT_EQ(code_of([&] { cmd_sweep(s, cfg()); }), ErrorCode::InvalidQuery);
}

TEST(OracleCommand, AgreementAndBound) {
  RunConfig c = cfg();
  c.n = 2;
  c.m = 3;
  c.ps = 0.5;
  Report r = cmd_oracle(c);
  EXPECT_EQ(r.results["oracle"].get<double>(), 0.4375);
  EXPECT_EQ(r.exit_code(), 0);
  c.n = 20;
  EXPECT_EQ(code_of([&] { cmd_oracle(c); }), ErrorCode::OracleBound);
}

TEST(MonteCarloCommand, DeskScaleAndDeterminism) {
  RunConfig c = cfg();
  c.ps = 0.05;
  c.rep_hz = 1.0;
  Report a = cmd_montecarlo(c);
  EXPECT_EQ(a.exit_code(), 0);
  EXPECT_LE(std::abs(a.results["z"].get<double>()), 3.0);
  EXPECT_EQ(emit_json(a), emit_json(cmd_montecarlo(c)));
  c.trials = 1;
  Report one = cmd_montecarlo(c);
  EXPECT_TRUE(one.results["stdErr"].is_number());
}

TEST(Emit, JsonShape) {
  auto j = nlohmann::json::parse(emit_json(cmd_rates(cfg())));
  for (const char* key : {"schemaVersion", "command", "inputs", "results", "checks"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["schemaVersion"], std::string(kSchemaVersion));
  EXPECT_EQ(j["inputs"]["mu"], 1.0);
}

TEST(Emit, CsvAndText) {
  Report r = cmd_rates(cfg());
  std::string csv = emit_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "r,probability");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  std::string text = emit_text(r);
  EXPECT_NE(text.find("nTot = 5.77600e-02"), std::string::npos);
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
}

TEST(Emit, VerifyCsvQuotesNothingUnexpected) {
  std::string csv = emit_csv(cmd_verify(cfg()));
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "amplitude,term");
}
