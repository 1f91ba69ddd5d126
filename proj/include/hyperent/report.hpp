#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperent/cascade.hpp"
#include "hyperent/rates.hpp"

namespace hyperent {

inline constexpr std::string_view kSchemaVersion = "1.0.0";

enum class OutputFormat { Text, Json, Csv };

std::string_view to_string(OutputFormat f);
/// "text", "json" or "csv"; throws InvalidQuery otherwise.
OutputFormat parse_format(std::string_view text);

struct RunConfig {
  Scheme scheme = Scheme::PolSpatial;
  int m = 3;
  double mu = 1.0;
  double ps = 7.6e-6;
  double rep_hz = 1e9;
  int n = 2;
  std::optional<int> r;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  int r_max = 4;
  std::string out;
  OutputFormat format = OutputFormat::Text;

  SourceModel source() const { return {mu, rep_hz, ps}; }
  /// Throws InvalidQuery on out-of-range numbers.
  void validate() const;
};

struct SweepSpec {
  std::vector<double> mu_list{0.5, 1.0, 2.0, 4.0};
  int m_first = 3;
  int m_last = 8;
  double ps = 7.6e-6;
  double rep_hz = 1e9;

  void validate() const;
};

/// "0.5,1,2,4"
std::vector<double> parse_mu_list(std::string_view text);
/// "3..8" or a single "5"
std::pair<int, int> parse_m_range(std::string_view text);

/// Settings merged from a config file and command-line flags. Both objects
/// use the long flag names without the leading dashes ("scheme", "m", "mu", "ps", "rep-hz",
/// "n", "r", "trials", "seed", "r-max", "out", "format"); flags win.
struct ResolvedConfig {
  RunConfig run;
  SweepSpec sweep;
  bool m_is_range = false;  // "m" held a range such as 3..8
  bool mu_is_list = false;  // "mu" held more than one value
};
ResolvedConfig resolve_config(const nlohmann::json& file, const nlohmann::json& flags);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Header plus rows, already formatted for CSV/text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;
  Table table;

  bool passed() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
  nlohmann::ordered_json to_json() const;
};

Report cmd_verify(const RunConfig& config);
Report cmd_rates(const RunConfig& config);
Report cmd_pairs(const RunConfig& config);
Report cmd_sweep(const SweepSpec& sweep, const RunConfig& config);
Report cmd_oracle(const RunConfig& config);
Report cmd_montecarlo(const RunConfig& config);

/// 6 significant digits in scientific notation, e.g. "5.77598e-02".
std::string format_sci(double x);
std::string csv_quote(std::string_view field);

std::string emit_json(const Report& report);
std::string emit_csv(const Report& report);
std::string emit_text(const Report& report);
std::string emit(const Report& report, OutputFormat format);

}  // namespace hyperent
