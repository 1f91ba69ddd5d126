#include "hyperent/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hyperent/error.hpp"
#include "hyperent/montecarlo.hpp"
#include "hyperent/oracle.hpp"

namespace hyperent {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_query(const std::string& what) { throw Error(ErrorCode::InvalidQuery, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view key) {
  std::string s(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) bad_query("cannot read a number for " + std::string(key) + ": '" + s + "'");
  return v;
}

long long parse_int(std::string_view text, std::string_view key) {
  text = trim(text);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_query("cannot read an integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return v;
}

double as_double(const nlohmann::json& v, std::string_view key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_double(v.get<std::string>(), key);
  bad_query(std::string(key) + " must be a number");
}

long long as_int(const nlohmann::json& v, std::string_view key) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (d != std::floor(d) || std::abs(d) > 9e18) bad_query(std::string(key) + " must be an integer");
    return static_cast<long long>(d);
  }
  if (v.is_string()) return parse_int(v.get<std::string>(), key);
  bad_query(std::string(key) + " must be an integer");
}

std::string as_string(const nlohmann::json& v, std::string_view key) {
  if (v.is_string()) return v.get<std::string>();
  bad_query(std::string(key) + " must be a string");
}

int checked_int(long long v, std::string_view key) {
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) bad_query(std::string(key) + " is out of range");
  return static_cast<int>(v);
}

std::string fmt_int(long long v) { return std::to_string(v); }

ojson scenarios_json(const std::vector<Scenario>& s, const char* index_name) {
  ojson arr = ojson::array();
  for (const auto& x : s) arr.push_back({{index_name, x.index}, {"probability", x.probability}});
  return arr;
}

double sum_of(const std::vector<Scenario>& s, int from = 0) {
  double total = 0.0;
  for (const auto& x : s) {
    if (x.index >= from) total += x.probability;
  }
  return total;
}

ojson echo(const RunConfig& c) {
  ojson in = ojson::object();
  in["scheme"] = std::string(to_string(c.scheme));
  in["m"] = c.m;
  in["mu"] = c.mu;
  in["ps"] = c.ps;
  in["repHz"] = c.rep_hz;
  in["n"] = c.n;
  in["r"] = c.r ? ojson(*c.r) : ojson(nullptr);
  in["trials"] = c.trials;
  in["seed"] = c.seed;
  in["rMax"] = c.r_max;
  in["format"] = std::string(to_string(c.format));
  return in;
}

// Published rates for ps = 7.6e-6 and F = 1 GHz.
struct QuotedRate {
  int m;
  double mu;
  double value;
  double rel_tol;
};
constexpr QuotedRate kQuoted[] = {
    {3, 0.5, 2.89e-2, 0.01}, {3, 1.0, 5.78e-2, 0.01}, {3, 2.0, 1.16e-1, 0.01},
    {3, 4.0, 2.31e-1, 0.01}, {4, 1.0, 4.44e-7, 0.02},
};

const QuotedRate* find_quoted(int m, const SourceModel& s) {
  if (s.ps != 7.6e-6 || s.rep_hz != 1e9) return nullptr;
  for (const auto& q : kQuoted) {
    if (q.m == m && q.mu == s.mu) return &q;
  }
  return nullptr;
}

void scalar_lines(std::ostringstream& os, const ojson& obj, const std::string& indent) {
  for (const auto& [key, v] : obj.items()) {
    if (v.is_array() || v.is_object()) continue;
    os << indent << key << " = ";
    if (v.is_number_float()) {
      os << format_sci(v.get<double>());
    } else if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find('\n') != std::string::npos) {
        std::string pad = indent + "  ";
        os << "\n" << pad;
        for (std::size_t i = 0; i < s.size(); ++i) {
          os << s[i];
          if (s[i] == '\n' && i + 1 < s.size()) os << pad;
        }
        if (s.back() != '\n') os << "\n";
        continue;
      }
      os << s;
    } else if (v.is_null()) {
      os << "-";
    } else {
      os << v.dump();
    }
    os << "\n";
  }
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  bad_query("unknown output format '" + std::string(text) + "' (expected text, json or csv)");
}

void RunConfig::validate() const {
  source().validate();
  if (n < 0) bad_query("n must be >= 0");
  if (r && *r < 0) bad_query("r must be >= 0");
  if (trials < 1) bad_query("trials must be >= 1");
  if (r_max < 0) bad_query("r-max must be >= 0");
}

void SweepSpec::validate() const {
  if (mu_list.empty()) bad_query("sweep needs at least one mu value");
  if (m_first < 2) bad_query("sweep m range must start at 2 or above");
  if (m_last < m_first) bad_query("sweep m range is empty");
  if (m_last > CascadeSpec::kMaxPhotons) bad_query("sweep m range is too large");
  for (double mu : mu_list) SourceModel{mu, rep_hz, ps}.validate();
}

std::vector<double> parse_mu_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_double(text.substr(0, comma), "mu"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<int, int> parse_m_range(std::string_view text) {
  text = trim(text);
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int m = checked_int(parse_int(text, "m"), "m");
    return {m, m};
  }
  return {checked_int(parse_int(text.substr(0, dots), "m"), "m"),
          checked_int(parse_int(text.substr(dots + 2), "m"), "m")};
}

ResolvedConfig resolve_config(const nlohmann::json& file, const nlohmann::json& flags) {
  static const std::set<std::string> known{"scheme", "m", "mu", "ps", "rep-hz", "n", "r",
                                           "trials", "seed", "r-max", "out", "format"};
  for (const auto* src : {&file, &flags}) {
    if (src->is_null()) continue;
    if (!src->is_object()) bad_query("configuration must be a JSON object");
    for (const auto& [key, _] : src->items()) {
      if (!known.contains(key)) bad_query("unknown configuration key '" + key + "'");
    }
  }
  auto pick = [&](const char* key) -> const nlohmann::json* {
    if (flags.is_object() && flags.contains(key) && !flags.at(key).is_null()) return &flags.at(key);
    if (file.is_object() && file.contains(key) && !file.at(key).is_null()) return &file.at(key);
    return nullptr;
  };

  ResolvedConfig rc;
  RunConfig& c = rc.run;
  if (auto* v = pick("scheme")) c.scheme = parse_scheme(as_string(*v, "scheme"));
  if (auto* v = pick("m")) {
    std::pair<int, int> range;
    if (v->is_array()) {
      if (v->size() != 2) bad_query("m range must have two entries");
      range = {checked_int(as_int((*v)[0], "m"), "m"), checked_int(as_int((*v)[1], "m"), "m")};
    } else if (v->is_string()) {
      range = parse_m_range(v->get<std::string>());
    } else {
      int m = checked_int(as_int(*v, "m"), "m");
      range = {m, m};
    }
    c.m = range.first;
    rc.sweep.m_first = range.first;
    rc.sweep.m_last = range.second;
    rc.m_is_range = range.first != range.second;
  }
  if (auto* v = pick("mu")) {
    std::vector<double> mus;
    if (v->is_array()) {
      for (const auto& x : *v) mus.push_back(as_double(x, "mu"));
    } else if (v->is_string()) {
      mus = parse_mu_list(v->get<std::string>());
    } else {
      mus.push_back(as_double(*v, "mu"));
    }
    if (mus.empty()) bad_query("mu list is empty");
    c.mu = mus.front();
    rc.sweep.mu_list = mus;
    rc.mu_is_list = mus.size() > 1;
  }
  if (auto* v = pick("ps")) c.ps = as_double(*v, "ps");
  if (auto* v = pick("rep-hz")) c.rep_hz = as_double(*v, "rep-hz");
  if (auto* v = pick("n")) c.n = checked_int(as_int(*v, "n"), "n");
  if (auto* v = pick("r")) c.r = checked_int(as_int(*v, "r"), "r");
  if (auto* v = pick("trials")) {
    long long t = as_int(*v, "trials");
    if (t < 1) bad_query("trials must be >= 1");
    c.trials = static_cast<std::uint64_t>(t);
  }
  if (auto* v = pick("seed")) {
    long long s = as_int(*v, "seed");
    if (s < 0) bad_query("seed must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (auto* v = pick("r-max")) c.r_max = checked_int(as_int(*v, "r-max"), "r-max");
  if (auto* v = pick("out")) c.out = as_string(*v, "out");
  if (auto* v = pick("format")) c.format = parse_format(as_string(*v, "format"));
  rc.sweep.ps = c.ps;
  rc.sweep.rep_hz = c.rep_hz;
  return rc;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ojson Report::to_json() const {
  ojson j = ojson::object();
  j["schemaVersion"] = std::string(kSchemaVersion);
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  ojson cs = ojson::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = cs;
  j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

std::string format_sci(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", x);
  return buf;
}

std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Report cmd_verify(const RunConfig& config) {
  CascadeSpec spec{config.scheme, config.m};
  spec.validate();
  Report rep;
  rep.command = "verify";
  rep.inputs = echo(config);

  Circuit circuit = build_cascade(spec);
  PhotonState full = simulate_symbolic(circuit, pump_state(circuit));
  VerifiedOutput out = verified_output(circuit, full);
  PhotonState expected = expected_state(spec);
  bool match = states_equal(out.state, expected, true);
  bool energy = !out.state.terms().empty() &&
                std::all_of(out.state.terms().begin(), out.state.terms().end(),
                            [](const auto& t) { return frequency_forest_ok(t.first, 1); });
  std::optional<std::string> factored = render_factored(out.state, spec);
  std::string listing = render(out.state);

  std::size_t lp_modes = 0;
  for (const auto& e : circuit.elements) {
    if (const auto* lp = std::get_if<LongPass>(&e.kind)) lp_modes += lp->modes.size();
  }

  auto& r = rep.results;
  r["scheme"] = std::string(to_string(spec.scheme));
  r["m"] = spec.m;
  r["photons"] = spec.m;
  r["crystals"] = circuit.crystal_count();
  r["elements"] = circuit.elements.size();
  r["longPassModes"] = lp_modes;
  r["match"] = match;
  r["energyConservation"] = energy;
  r["normalized"] = out.state.is_normalized();
  r["discardedTerms"] = out.discarded_terms;
  r["discardedWeight"] = out.discarded_weight.value();
  r["rendered"] = factored ? *factored : listing;
  r["outputModes"] = circuit.output_modes;
  r["discardModes"] = circuit.discard_modes;

  rep.table.columns = {"amplitude", "term"};
  ojson terms = ojson::array();
  std::istringstream lines(listing);
  for (std::string line; std::getline(lines, line);) {
    auto sp = line.find(' ');
    std::string amp = line.substr(0, sp);
    std::string term = sp == std::string::npos ? "" : line.substr(sp + 1);
    terms.push_back({{"amplitude", amp}, {"term", term}});
    rep.table.rows.push_back({amp, term});
  }
  r["terms"] = terms;

  rep.checks.push_back({"state matches target", match,
                        match ? "equal up to global phase" : "output differs from the closed-form target"});
  bool crystals_ok = circuit.crystal_count() == static_cast<std::size_t>(spec.crystals());
  rep.checks.push_back({"crystal count is m-1", crystals_ok, std::to_string(circuit.crystal_count()) + " crystals"});
  rep.checks.push_back({"energy conservation", energy, "frequency labels form one conversion tree per term"});
  rep.checks.push_back({"output normalized", out.state.is_normalized(), "norm is exactly 1"});
  return rep;
}

Report cmd_rates(const RunConfig& config) {
  config.validate();
  SourceModel s = config.source();
  RateReport rr = rate_report(config.m, s, config.r_max);
  Report rep;
  rep.command = "rates";
  rep.inputs = echo(config);

  auto& r = rep.results;
  r["m"] = config.m;
  r["nTot"] = rr.n_tot;
  r["log10NTot"] = rr.n_tot > 0.0 ? ojson(std::log10(rr.n_tot)) : ojson(nullptr);
  r["successProb"] = rr.pulse_success_probability;
  r["ratio21"] = rr.ratio21;
  r["rMax"] = config.r_max;
  r["prPairs"] = scenarios_json(rr.pairs.terms, "r");
  r["tail"] = rr.pairs.tail;

  if (const QuotedRate* q = find_quoted(config.m, s)) {
    double rel = std::abs(rr.n_tot - q->value) / q->value;
    r["quoted"] = {{"value", q->value}, {"relativeDifference", rel}, {"tolerance", q->rel_tol}};
    rep.checks.push_back({"matches quoted rate", rel <= q->rel_tol,
                          "quoted " + format_sci(q->value) + ", relative difference " + format_sci(rel)});
  }
  if (config.m == 4) {
    rep.notes.push_back(
        "erratum: the published m=4 rate at mu=1, ps=7.6e-6, F=1e9 is 4.44e-07 pairs/s, but "
        "F*(1-exp(-mu*ps^3)) evaluates to 4.38976e-07; this report gives the formula value");
  }

  bool in_range = rr.n_tot >= 0.0 && rr.pulse_success_probability >= 0.0 && rr.pulse_success_probability <= 1.0;
  for (const auto& t : rr.pairs.terms) in_range = in_range && t.probability >= 0.0 && t.probability <= 1.0;
  double mass = sum_of(rr.pairs.terms);
  rep.checks.push_back({"probabilities within [0,1]", in_range, ""});
  rep.checks.push_back({"pair distribution mass at most 1", mass <= 1.0 + 1e-12,
                        "sum to r-max " + format_sci(mass) + ", tail " + format_sci(rr.pairs.tail)});

  rep.table.columns = {"r", "probability"};
  for (const auto& t : rr.pairs.terms) rep.table.rows.push_back({fmt_int(t.index), format_sci(t.probability)});
  return rep;
}

Report cmd_pairs(const RunConfig& config) {
  EventQuery q{config.n, config.m, config.r};
  q.validate();
  if (!(config.ps >= 0.0 && config.ps <= 1.0)) bad_query("ps must lie in [0, 1]");
  Report rep;
  rep.command = "pairs";
  rep.inputs = echo(config);

  double success = p_success(q.n, q.m, config.ps);
  auto scen = p_success_scenarios(q.n, q.m, config.ps);
  auto fail = p_failure_terms(q.n, q.m, config.ps);
  double fail_total = sum_of(fail);
  double scen_success = sum_of(scen, 1);

  auto& r = rep.results;
  r["n"] = q.n;
  r["m"] = q.m;
  r["ps"] = config.ps;
  r["pSuccess"] = success;
  r["failureTotal"] = fail_total;
  if (q.r) r["pExactlyR"] = scen[*q.r].probability;
  r["successScenarios"] = scenarios_json(scen, "r");
  r["failureTerms"] = scenarios_json(fail, "i");

  double completeness = std::abs(success + fail_total - 1.0);
  double consistency = std::abs(scen_success - success);
  rep.checks.push_back({"success plus failure equals 1", completeness <= 1e-12,
                        "deviation " + format_sci(completeness)});
  rep.checks.push_back({"pair scenarios sum to the success probability", consistency <= 1e-12,
                        "deviation " + format_sci(consistency)});

  rep.table.columns = {"kind", "index", "probability"};
  for (const auto& s : scen) rep.table.rows.push_back({"success", fmt_int(s.index), format_sci(s.probability)});
  for (const auto& f : fail) rep.table.rows.push_back({"failure", fmt_int(f.index), format_sci(f.probability)});
  return rep;
}

Report cmd_sweep(const SweepSpec& sweep, const RunConfig& config) {
  sweep.validate();
  Report rep;
  rep.command = "sweep";
  rep.inputs = echo(config);
  rep.inputs["muList"] = sweep.mu_list;
  rep.inputs["mRange"] = {sweep.m_first, sweep.m_last};

  const int m_count = sweep.m_last - sweep.m_first + 1;
  std::vector<std::vector<double>> grid(sweep.mu_list.size(), std::vector<double>(m_count));
  ojson rows = ojson::array();
  rep.table.columns = {"mu", "m", "nTot", "log10NTot"};
  for (std::size_t i = 0; i < sweep.mu_list.size(); ++i) {
    for (int m = sweep.m_first; m <= sweep.m_last; ++m) {
      double mu = sweep.mu_list[i];
      double nt = n_tot(m, SourceModel{mu, sweep.rep_hz, sweep.ps});
      double lg = std::log10(nt);
      grid[i][m - sweep.m_first] = lg;
      rows.push_back({{"mu", mu}, {"m", m}, {"nTot", nt}, {"log10NTot", std::isfinite(lg) ? ojson(lg) : ojson(nullptr)}});
      rep.table.rows.push_back({format_sci(mu), fmt_int(m), format_sci(nt), format_sci(lg)});
    }
  }
  rep.results["rows"] = rows;

  bool dec_m = true;
  for (const auto& line : grid) {
    for (int k = 1; k < m_count; ++k) dec_m = dec_m && line[k] < line[k - 1];
  }
  std::vector<std::size_t> by_mu(sweep.mu_list.size());
  for (std::size_t i = 0; i < by_mu.size(); ++i) by_mu[i] = i;
  std::sort(by_mu.begin(), by_mu.end(), [&](auto a, auto b) { return sweep.mu_list[a] < sweep.mu_list[b]; });
  bool inc_mu = true;
  for (int k = 0; k < m_count; ++k) {
    for (std::size_t i = 1; i < by_mu.size(); ++i) inc_mu = inc_mu && grid[by_mu[i]][k] > grid[by_mu[i - 1]][k];
  }
  rep.checks.push_back({"decreasing in m for each mu", dec_m, ""});
  rep.checks.push_back({"increasing in mu for each m", inc_mu, ""});
  return rep;
}

Report cmd_oracle(const RunConfig& config) {
  EventQuery q{config.n, config.m, std::nullopt};
  q.validate();
  OracleResult o = enumerate_outcomes(q.n, q.m, config.ps);
  double closed = p_success(q.n, q.m, config.ps);
  double diff = std::abs(closed - o.success);
  auto scen = p_success_scenarios(q.n, q.m, config.ps);
  auto fail = p_failure_terms(q.n, q.m, config.ps);

  Report rep;
  rep.command = "oracle";
  rep.inputs = echo(config);
  auto& r = rep.results;
  r["n"] = q.n;
  r["m"] = q.m;
  r["ps"] = config.ps;
  r["closedForm"] = closed;
  r["oracle"] = o.success;
  r["absDiff"] = diff;
  r["outcomes"] = o.outcomes;
  r["totalMass"] = o.total_mass;
  r["successScenarios"] = scenarios_json(scen, "r");
  r["failureTerms"] = scenarios_json(fail, "i");

  rep.checks.push_back({"oracle agrees with closed form", diff <= 1e-12, "absolute difference " + format_sci(diff)});
  double mass_dev = std::abs(o.total_mass - 1.0);
  rep.checks.push_back({"enumerated mass is 1", mass_dev <= 1e-12, "deviation " + format_sci(mass_dev)});

  rep.table.columns = {"kind", "index", "probability"};
  rep.table.rows.push_back({"closed", "", format_sci(closed)});
  rep.table.rows.push_back({"oracle", "", format_sci(o.success)});
  for (const auto& s : scen) rep.table.rows.push_back({"success", fmt_int(s.index), format_sci(s.probability)});
  for (const auto& f : fail) rep.table.rows.push_back({"failure", fmt_int(f.index), format_sci(f.probability)});
  return rep;
}

Report cmd_montecarlo(const RunConfig& config) {
  config.validate();
  SourceModel s = config.source();
  MonteCarloEstimate est = monte_carlo_rate(config.m, s, config.trials, config.seed);
  double closed = n_tot(config.m, s);
  // Without observed spread (e.g. a single trial) fall back to the spread implied by the closed form.
  double p = closed / s.rep_hz;
  double sigma = est.std_error > 0.0
                     ? est.std_error
                     : s.rep_hz * std::sqrt(p * (1.0 - p) / static_cast<double>(config.trials));
  double diff = est.estimate - closed;
  double z = sigma > 0.0 ? diff / sigma : (diff == 0.0 ? 0.0 : INFINITY);

  Report rep;
  rep.command = "montecarlo";
  rep.inputs = echo(config);
  auto& r = rep.results;
  r["m"] = config.m;
  r["estimate"] = est.estimate;
  r["stdErr"] = est.std_error;
  r["closedForm"] = closed;
  r["z"] = std::isfinite(z) ? ojson(z) : ojson(nullptr);
  r["fraction"] = est.fraction;
  r["pulses"] = est.pulses;
  r["successfulPulses"] = est.successful_pulses;
  r["shardSize"] = kShardSize;
  r["pairHistogram"] = est.pair_histogram;

  rep.checks.push_back({"estimate within 3 standard errors", std::abs(z) <= 3.0, "z = " + format_sci(z)});

  rep.table.columns = {"estimate", "stdErr", "closedForm", "z", "pulses", "successfulPulses"};
  rep.table.rows.push_back({format_sci(est.estimate), format_sci(est.std_error), format_sci(closed), format_sci(z),
                            fmt_int(static_cast<long long>(est.pulses)),
                            fmt_int(static_cast<long long>(est.successful_pulses))});
  return rep;
}

std::string emit_json(const Report& report) { return report.to_json().dump(2) + "\n"; }

std::string emit_csv(const Report& report) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i]);
    os << "\r\n";
  };
  line(report.table.columns);
  for (const auto& row : report.table.rows) line(row);
  return os.str();
}

std::string emit_text(const Report& report) {
  std::ostringstream os;
  os << "hyperent " << report.command << " (report schema " << kSchemaVersion << ")\n";
  os << "inputs:\n";
  scalar_lines(os, report.inputs, "  ");
  os << "results:\n";
  scalar_lines(os, report.results, "  ");
  if (!report.table.columns.empty() && report.command != "verify") {
    std::vector<std::size_t> width(report.table.columns.size());
    for (std::size_t c = 0; c < width.size(); ++c) width[c] = display_width(report.table.columns[c]);
    for (const auto& row : report.table.rows) {
      for (std::size_t c = 0; c < width.size() && c < row.size(); ++c)
        width[c] = std::max(width[c], display_width(row[c]));
    }
    auto line = [&](const std::vector<std::string>& cells) {
      os << " ";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << " " << cells[c] << std::string(width[c] - display_width(cells[c]), ' ');
      }
      os << "\n";
    };
    line(report.table.columns);
    for (const auto& row : report.table.rows) line(row);
  }
  if (!report.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : report.notes) os << "  " << n << "\n";
  }
  os << "checks:\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << " " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
  return os.str();
}

std::string emit(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return emit_json(report);
    case OutputFormat::Csv: return emit_csv(report);
    case OutputFormat::Text: break;
  }
  return emit_text(report);
}

}  // namespace hyperent
