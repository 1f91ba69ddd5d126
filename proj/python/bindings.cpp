#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperent/cascade.hpp"
#include "hyperent/error.hpp"
#include "hyperent/montecarlo.hpp"
#include "hyperent/oracle.hpp"
#include "hyperent/rates.hpp"
#include "hyperent/report.hpp"

namespace py = pybind11;
using namespace hyperent;

namespace {

std::vector<std::pair<int, double>> pairs_of(const std::vector<Scenario>& s) {
  std::vector<std::pair<int, double>> out;
  out.reserve(s.size());
  for (const auto& x : s) out.emplace_back(x.index, x.probability);
  return out;
}

SourceModel source(double mu, double ps, double rep_hz) { return SourceModel{mu, rep_hz, ps}; }

RunConfig config(Scheme scheme, int m, double mu, double ps, double rep_hz, int n, std::optional<int> r,
                 std::uint64_t trials, std::uint64_t seed, int r_max) {
  RunConfig c;
  c.scheme = scheme;
  c.m = m;
  c.mu = mu;
  c.ps = ps;
  c.rep_hz = rep_hz;
  c.n = n;
  c.r = r;
  c.trials = trials;
  c.seed = seed;
  c.r_max = r_max;
  return c;
}

}  // namespace

PYBIND11_MODULE(_hyperent, m) {
  m.doc() = "Cascaded polarization hyperentanglement simulator";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "HyperentError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<Scheme>(m, "Scheme")
      .value("PolSpatial", Scheme::PolSpatial)
      .value("PolTimeBin", Scheme::PolTimeBin);
  m.def("parse_scheme", [](const std::string& s) { return parse_scheme(s); });

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("m", [](const Circuit& c) { return c.spec.m; })
      .def_property_readonly("scheme", [](const Circuit& c) { return c.spec.scheme; })
      .def_readonly("input_mode", &Circuit::input_mode)
      .def_readonly("output_modes", &Circuit::output_modes)
      .def_readonly("discard_modes", &Circuit::discard_modes)
      .def_readonly("stage_ends", &Circuit::stage_ends)
      .def_property_readonly("element_count", [](const Circuit& c) { return c.elements.size(); })
      .def("crystal_count", &Circuit::crystal_count)
      .def("describe", &Circuit::describe);

  m.def("build_cascade", [](Scheme s, int photons) { return build_cascade(CascadeSpec{s, photons}); },
        py::arg("scheme"), py::arg("m"));

  m.def(
      "simulate",
      [](Scheme s, int photons, std::optional<std::size_t> elements, bool verified) {
        Circuit c = build_cascade(CascadeSpec{s, photons});
        PhotonState st = run_symbolic(c, pump_state(c), elements).state;
        if (verified) st = verified_output(c, st).state;
        return render(st);
      },
      py::arg("scheme"), py::arg("m"), py::arg("elements") = std::nullopt, py::arg("verified") = true,
      "Rendered output state, one term per line.");

  m.def(
      "verify",
      [](Scheme s, int photons) {
        CascadeSpec spec{s, photons};
        Circuit c = build_cascade(spec);
        PhotonState out = verified_output(c, simulate_symbolic(c, pump_state(c))).state;
        return states_equal(out, expected_state(spec), true);
      },
      py::arg("scheme"), py::arg("m"));

  m.def(
      "render_factored",
      [](Scheme s, int photons) {
        CascadeSpec spec{s, photons};
        Circuit c = build_cascade(spec);
        return render_factored(verified_output(c, simulate_symbolic(c, pump_state(c))).state, spec);
      },
      py::arg("scheme"), py::arg("m"));

  m.def("expected_state", [](Scheme s, int photons) { return render(expected_state(CascadeSpec{s, photons})); },
        py::arg("scheme"), py::arg("m"));

  m.def("p_success", &p_success, py::arg("n"), py::arg("m"), py::arg("ps"));
  m.def("p_success_scenarios", [](int n, int mm, double ps) { return pairs_of(p_success_scenarios(n, mm, ps)); },
        py::arg("n"), py::arg("m"), py::arg("ps"));
  m.def("p_failure_terms", [](int n, int mm, double ps) { return pairs_of(p_failure_terms(n, mm, ps)); },
        py::arg("n"), py::arg("m"), py::arg("ps"));
  m.def("pr_pairs", [](int mm, int r, double mu, double ps) { return pr_pairs(mm, r, mu, ps); }, py::arg("m"),
        py::arg("r"), py::arg("mu"), py::arg("ps"));
  m.def("n_tot", [](int mm, double mu, double ps, double rep_hz) { return n_tot(mm, source(mu, ps, rep_hz)); },
        py::arg("m"), py::arg("mu"), py::arg("ps"), py::arg("rep_hz"));
  m.def(
      "cascade_source_distribution",
      [](int mm, double mu, double ps, int r_max) {
        PairDistribution d = cascade_source_distribution(mm, source(mu, ps, 1.0), r_max);
        return py::make_tuple(pairs_of(d.terms), d.tail);
      },
      py::arg("m"), py::arg("mu"), py::arg("ps"), py::arg("r_max"));
  m.def("oracle_success", &oracle_success, py::arg("n"), py::arg("m"), py::arg("ps"));

  m.def(
      "simulate_stochastic",
      [](Scheme s, int photons, std::uint64_t n_pump, double ps, std::uint64_t seed) {
        CoincidenceCounts c = simulate_stochastic(CascadeSpec{s, photons}, n_pump, ps, seed);
        py::dict d;
        d["pumps"] = c.pumps;
        d["successes"] = c.successes;
        d["stopped_at"] = c.stopped_at;
        return d;
      },
      py::arg("scheme"), py::arg("m"), py::arg("n_pump"), py::arg("ps"), py::arg("seed"));
  m.def(
      "monte_carlo_rate",
      [](int mm, double mu, double ps, double rep_hz, std::uint64_t pulses, std::uint64_t seed) {
        MonteCarloEstimate e = monte_carlo_rate(mm, source(mu, ps, rep_hz), pulses, seed);
        py::dict d;
        d["estimate"] = e.estimate;
        d["std_error"] = e.std_error;
        d["fraction"] = e.fraction;
        d["pulses"] = e.pulses;
        d["successful_pulses"] = e.successful_pulses;
        d["pair_histogram"] = e.pair_histogram;
        return d;
      },
      py::arg("m"), py::arg("mu"), py::arg("ps"), py::arg("rep_hz"), py::arg("pulses"), py::arg("seed"));

  m.def(
      "report_json",
      [](const std::string& command, Scheme scheme, int photons, double mu, double ps, double rep_hz, int n,
         std::optional<int> r, std::uint64_t trials, std::uint64_t seed, int r_max) {
        RunConfig c = config(scheme, photons, mu, ps, rep_hz, n, r, trials, seed, r_max);
        Report rep;
        if (command == "verify") {
          rep = cmd_verify(c);
        } else if (command == "rates") {
          rep = cmd_rates(c);
        } else if (command == "pairs") {
          rep = cmd_pairs(c);
        } else if (command == "oracle") {
          rep = cmd_oracle(c);
        } else if (command == "montecarlo") {
          rep = cmd_montecarlo(c);
        } else {
          throw Error(ErrorCode::InvalidQuery, "unknown command " + command);
        }
        return emit_json(rep);
      },
      py::arg("command"), py::arg("scheme") = Scheme::PolSpatial, py::arg("m") = 3, py::arg("mu") = 1.0,
      py::arg("ps") = 7.6e-6, py::arg("rep_hz") = 1e9, py::arg("n") = 2, py::arg("r") = std::nullopt,
      py::arg("trials") = 1000000, py::arg("seed") = 42, py::arg("r_max") = 4);

  m.attr("SCHEMA_VERSION") = std::string(kSchemaVersion);
}
