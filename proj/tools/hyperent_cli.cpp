// hyperent command-line front end.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperent/error.hpp"
#include "hyperent/report.hpp"

namespace {

constexpr int kExitInvalid = 2;

struct Flags {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_common(CLI::App* cmd, Flags& flags) {
  static const char* names[][2] = {
      {"scheme", "pol-spatial or pol-time-bin"},
      {"m", "photons in the target state (sweep: range such as 3..8)"},
      {"mu", "mean photon number per pulse (sweep: comma list)"},
      {"ps", "per-crystal splitting probability"},
      {"rep-hz", "pump repetition rate in Hz"},
      {"n", "photons in the pulse"},
      {"r", "pair count"},
      {"trials", "Monte Carlo pulses"},
      {"seed", "Monte Carlo seed"},
      {"r-max", "largest pair count listed"},
      {"out", "write the report to this file"},
      {"format", "text, json or csv"},
  };
  for (const auto& [name, help] : names) {
    std::string key = name;
    cmd->add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
  }
  cmd->add_option("--config", flags.config_path, "JSON file with default settings");
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nullptr;
  std::ifstream in(path);
  if (!in) throw hyperent::Error(hyperent::ErrorCode::InvalidQuery, "cannot open config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw hyperent::Error(hyperent::ErrorCode::InvalidQuery, "config file " + path + ": " + e.what());
  }
}

hyperent::Report dispatch(const std::string& command, const hyperent::ResolvedConfig& rc) {
  using namespace hyperent;
  if (command == "sweep") return cmd_sweep(rc.sweep, rc.run);
  if (rc.m_is_range) throw Error(ErrorCode::InvalidQuery, "an m range is only accepted by sweep");
  if (rc.mu_is_list) throw Error(ErrorCode::InvalidQuery, "a mu list is only accepted by sweep");
  if (command == "verify") return cmd_verify(rc.run);
  if (command == "rates") return cmd_rates(rc.run);
  if (command == "pairs") return cmd_pairs(rc.run);
  if (command == "oracle") return cmd_oracle(rc.run);
  return cmd_montecarlo(rc.run);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cascaded hyperentanglement simulator"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"verify", "simulate the cascade and compare with the target state"},
      {"rates", "pair generation rate for a Poisson pump"},
      {"pairs", "success and failure scenario probabilities for n photons"},
      {"sweep", "rate table over mean photon numbers and cascade sizes"},
      {"oracle", "closed form against exhaustive enumeration"},
      {"montecarlo", "sampled rate with standard error"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    nlohmann::json flag_json = nlohmann::json::object();
    for (const auto& [k, v] : flags.values) flag_json[k] = v;
    hyperent::ResolvedConfig rc = hyperent::resolve_config(load_config(flags.config_path), flag_json);
    hyperent::Report report = dispatch(command, rc);
    std::string body = hyperent::emit(report, rc.run.format);
    if (rc.run.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(rc.run.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << rc.run.out << "\n";
        return kExitInvalid;
      }
      out << body;
    }
    return report.exit_code();
  } catch (const hyperent::Error& e) {
    std::cerr << "error [" << hyperent::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.is_input_error() ? kExitInvalid : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
