#include "hyperent/cascade.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "hyperent/error.hpp"

namespace hyperent {
namespace {

// Interior ports of the Sagnac loop that converts heap node k. The H port
// feeds the counter-clockwise direction, the V port the clockwise one.
struct LoopPorts {
  Mode h_side;
  Mode v_side;
};

LoopPorts loop_ports(const CascadeSpec& spec, int branch, int k) {
  if (spec.scheme == Scheme::PolSpatial) {
    const std::string p = branch == 0 ? "a_" : "b_";
    return {p + std::to_string(2 * k + 2), p + std::to_string(2 * k + 1)};
  }
  return {std::to_string(2 * k + 2), std::to_string(2 * k + 3)};
}

int branch_count(const CascadeSpec& spec) { return spec.scheme == Scheme::PolSpatial ? 2 : 1; }

/// Frequency token carried by heap node n: the port that keeps the parent's
/// polarization (node 2k) receives the idler, the other port the signal.
FrequencyTag node_frequency(int n) {
  if (n == 1) return FrequencyTag::pump();
  const FrequencyTag parent = node_frequency(n / 2);
  return n % 2 == 0 ? parent.idler() : parent.signal();
}

/// Polarization of node n when the pump enters its first loop as `pump_pol`:
/// every conversion keeps the polarization on node 2k and flips it on 2k+1.
Polarization node_polarization(int n, Polarization pump_pol) {
  const bool flip = (std::popcount(static_cast<unsigned>(n)) - 1) % 2 == 1;
  return flip ? flipped(pump_pol) : pump_pol;
}

std::vector<int> leaves(const CascadeSpec& spec) {
  std::vector<int> v;
  for (int n = spec.m; n <= 2 * spec.m - 1; ++n) v.push_back(n);
  return v;
}

}  // namespace

std::string_view to_string(Scheme s) {
  return s == Scheme::PolSpatial ? "pol-spatial" : "pol-time-bin";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "pol-spatial") return Scheme::PolSpatial;
  if (text == "pol-time-bin") return Scheme::PolTimeBin;
  throw Error(ErrorCode::InvalidSpec,
              "unknown scheme '" + std::string(text) + "' (pol-spatial | pol-time-bin)");
}

void CascadeSpec::validate() const {
  if (m < 2 || m > kMaxPhotons) {
    throw Error(ErrorCode::InvalidSpec, "photon count m=" + std::to_string(m) +
                                            " outside [2, " + std::to_string(kMaxPhotons) + "]");
  }
}

Mode node_mode(const CascadeSpec& spec, int branch, int node) {
  if (spec.scheme == Scheme::PolSpatial) {
    const std::string p = branch == 0 ? "a" : "b";
    const std::string leaf_family = branch == 0 ? "d" : "c";
    if (node == 1) return p;
    if (node <= 3) return p + "_" + std::to_string(node - 1);
    return leaf_family + "_" + std::to_string(node - 3);
  }
  if (node == 1) return "3";
  if (node == 2) return "a";
  if (node == 3) return "b";
  const int j = node / 2 - 1;
  return (node % 2 == 0 ? "a_" : "b_") + std::to_string(j);
}

std::vector<int> display_leaf_order(const CascadeSpec& spec) {
  std::vector<int> order = leaves(spec);
  if (spec.scheme == Scheme::PolSpatial) {
    if (spec.m > 2) std::sort(order.begin(), order.end(), std::greater<>());
    return order;
  }
  // b_j a_j pairs by increasing j, the first-stage pair (a, b) last.
  auto key = [](int n) {
    const int j = n < 4 ? std::numeric_limits<int>::max() : n / 2 - 1;
    const int within = n < 4 ? n % 2 : 1 - n % 2;
    return std::pair{j, within};
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
  return order;
}

std::size_t Circuit::count_if_kind(std::size_t variant_index) const {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const auto& e) {
    return e.kind.index() == variant_index;
  }));
}

std::size_t Circuit::crystal_count() const {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [](const auto& e) {
    return std::holds_alternative<Crystal>(e.kind);
  }));
}

void Circuit::validate() const {
  std::set<Mode> live{input_mode};
  live.insert(vacuum_ports.begin(), vacuum_ports.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& in : hyperent::input_modes(elements[i].kind)) {
      if (!live.contains(in)) {
        throw Error(ErrorCode::InvalidSpec, "element " + std::to_string(i) + " (" +
                                                elements[i].label + ") reads mode " + in +
                                                " before anything produces it");
      }
    }
    for (const auto& out : hyperent::output_modes(elements[i].kind)) live.insert(out);
  }
  for (const auto& out : output_modes) {
    if (!live.contains(out)) {
      throw Error(ErrorCode::InvalidSpec, "declared output mode " + out + " is never produced");
    }
  }
}

std::string Circuit::describe() const {
  std::ostringstream os;
  os << "circuit " << to_string(spec.scheme) << " m=" << spec.m << "\n";
  os << "input: " << input_mode << "\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    os << (i < 10 ? "0" : "") << i << " " << hyperent::describe(elements[i]) << "\n";
  }
  os << "outputs:";
  for (const auto& m : output_modes) os << " " << m;
  os << "\n";
  if (!discard_modes.empty()) {
    os << "discard:";
    for (const auto& m : discard_modes) os << " " << m;
    os << "\n";
  }
  return os.str();
}

Circuit build_cascade(const CascadeSpec& spec) {
  spec.validate();
  Circuit c;
  c.spec = spec;
  c.input_mode = "1";
  c.vacuum_ports = {"1v"};
  auto push = [&](std::string label, ElementKind kind) {
    c.elements.push_back(OpticalElement{std::move(label), std::move(kind)});
  };

  if (spec.scheme == Scheme::PolSpatial) {
    push("HWP_1", Hwp{22.5, {"1"}});
    push("NPBS", Npbs{"1", "1v", node_mode(spec, 0, 1), node_mode(spec, 1, 1)});
  } else {
    push("NPBS_1", Npbs{"1", "1v", "s", "l"});
    push("DELAY", DelayTagger{"s", "l", "s", "l"});
    push("NPBS_2", Npbs{"s", "l", "2", "c"});
    push("HWP_1", Hwp{22.5, {"2"}});
    c.discard_modes = {"c"};
  }

  const int branches = branch_count(spec);
  for (int k = 1; k < spec.m; ++k) {
    const std::string ks = std::to_string(k);
    const std::string hwp = "HWP_" + std::to_string(k + 1);
    Dm dm;
    Pbs first_pass, second_pass;
    Hwp flip{45.0, {}};
    Crystal crystal;
    crystal.id = k;
    crystal.max_input_depth = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(k))) - 1;
    for (int b = 0; b < branches; ++b) {
      const Mode x = node_mode(spec, b, k);
      const Mode x1 = node_mode(spec, b, 2 * k);
      const Mode x2 = node_mode(spec, b, 2 * k + 1);
      const LoopPorts loop = loop_ports(spec, b, k);
      // The first loop is pumped by the laser; later loops by down-converted
      // light, so the mirror passes the other frequency class there.
      if (k == 1 && spec.scheme == Scheme::PolTimeBin) {
        dm.ports.push_back({"2", x, "2_dm"});
      } else if (k == 1) {
        dm.ports.push_back({x, x, x + "_dm"});
      } else {
        dm.ports.push_back({x, x + "_dm", x});
      }
      first_pass.ports.push_back({x, loop.h_side, loop.v_side});
      flip.modes.push_back(loop.v_side);
      crystal.routes.push_back({loop.h_side, loop.v_side});  // counter-clockwise
      crystal.routes.push_back({loop.v_side, loop.h_side});  // clockwise
      // Pairs return to the PBS from opposite sides, so the port that keeps the
      // parent's polarization is x1 in both directions.
      second_pass.ports.push_back({loop.v_side, x1, x2});
      second_pass.ports.push_back({loop.h_side, x2, x1});
    }
    push("DM_" + ks, std::move(dm));
    push("PBS_" + ks + "/in", std::move(first_pass));
    push(hwp + "/cw", flip);
    push("ppKTP_" + ks, std::move(crystal));
    push(hwp + "/ccw", std::move(flip));
    push("PBS_" + ks + "/out", std::move(second_pass));
    c.stage_ends.push_back(c.elements.size());
  }

  LongPass lp;
  for (int b = 0; b < branches; ++b) {
    for (int n : display_leaf_order(spec)) lp.modes.push_back(node_mode(spec, b, n));
  }
  c.output_modes = lp.modes;
  push("LP", std::move(lp));
  c.validate();
  return c;
}

PhotonState pump_state(const Circuit& circuit) {
  return PhotonState::single(
      {Photon{Polarization::H, circuit.input_mode, TimeBin::None, FrequencyTag::pump()}});
}

SymbolicRun run_symbolic(const Circuit& circuit, const PhotonState& input,
                         std::optional<std::size_t> element_count) {
  SymbolicRun run;
  run.state = input;
  const std::size_t n = std::min(element_count.value_or(circuit.elements.size()),
                                 circuit.elements.size());
  for (std::size_t i = 0; i < n; ++i) {
    run.state = apply(circuit.elements[i], run.state, &run.longpass_removed_terms);
    ++run.elements_applied;
  }
  return run;
}

PhotonState simulate_symbolic(const Circuit& circuit, const PhotonState& input) {
  return run_symbolic(circuit, input).state;
}

BranchPatterns branch_patterns(const CascadeSpec& spec) {
  spec.validate();
  BranchPatterns bp;
  const auto order = display_leaf_order(spec);
  for (int n : order) {
    if (spec.scheme == Scheme::PolSpatial) {
      bp.branch_a.push_back({node_mode(spec, 0, n), TimeBin::None});
      bp.branch_b.push_back({node_mode(spec, 1, n), TimeBin::None});
    } else {
      bp.branch_a.push_back({node_mode(spec, 0, n), TimeBin::T1});
      bp.branch_b.push_back({node_mode(spec, 0, n), TimeBin::T2});
    }
  }
  for (Polarization pump : {Polarization::H, Polarization::V}) {
    std::string pattern;
    for (int n : order) pattern += to_char(node_polarization(n, pump));
    bp.polarizations.push_back(pattern);
  }
  std::sort(bp.polarizations.begin(), bp.polarizations.end());
  return bp;
}

PhotonState expected_state(const CascadeSpec& spec) {
  spec.validate();
  PhotonState out;
  const auto nodes = leaves(spec);
  std::vector<std::pair<int, TimeBin>> branches;
  if (spec.scheme == Scheme::PolSpatial) {
    branches = {{0, TimeBin::None}, {1, TimeBin::None}};
  } else {
    branches = {{0, TimeBin::T1}, {0, TimeBin::T2}};
  }
  for (const auto& [branch, bin] : branches) {
    for (Polarization pump : {Polarization::H, Polarization::V}) {
      std::vector<Photon> photons;
      for (int n : nodes) {
        photons.push_back(Photon{node_polarization(n, pump), node_mode(spec, branch, n), bin,
                                 node_frequency(n)});
      }
      out.add(PhotonTerm(std::move(photons)), Amplitude(+1, 2));
    }
  }
  return out;
}

VerifiedOutput verified_output(const Circuit& circuit, const PhotonState& full_output) {
  Restriction r = restrict_excluding(full_output, circuit.discard_modes);
  VerifiedOutput v;
  v.discarded_weight = r.discarded_weight;
  v.discarded_terms = r.discarded_terms;
  v.state = r.discarded_terms == 0 ? std::move(r.kept) : renormalized(r.kept);
  return v;
}

std::optional<std::string> render_factored(const PhotonState& state, const CascadeSpec& spec) {
  const BranchPatterns bp = branch_patterns(spec);
  const PhotonState target = ghz_product(bp.polarizations, bp.branch_a, bp.branch_b);
  const PhotonState stripped = strip_frequency(state);
  Amplitude amp(+1, 2);
  if (stripped == target.negated()) {
    amp = -amp;
  } else if (stripped != target) {
    return std::nullopt;
  }
  const std::string pols =
      "(|" + bp.polarizations[0] + "⟩+|" + bp.polarizations[1] + "⟩)";
  if (spec.scheme == Scheme::PolSpatial) {
    std::string a, b;
    for (const auto& s : bp.branch_a) a += s.mode;
    for (const auto& s : bp.branch_b) b += s.mode;
    if (b < a) std::swap(a, b);
    return amp.to_string() + " " + pols + "⊗(|" + a + "⟩+|" + b + "⟩)";
  }
  std::string t1, t2, modes;
  for (const auto& s : bp.branch_a) {
    t1 += "t_1";
    t2 += "t_2";
    modes += s.mode;
  }
  return amp.to_string() + " [" + pols + "⊗(" + t1 + "+" + t2 + ")]_{" + modes + "}";
}

}  // namespace hyperent
