#include "hyperent/elements.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperent/error.hpp"

namespace hyperent {
namespace {

/// Each photon maps to a superposition of photon groups; a term maps to the
/// product of its photons' images.
using PhotonImage = std::vector<std::pair<std::vector<Photon>, Amplitude>>;

PhotonImage unchanged(const Photon& p) { return {{{p}, Amplitude::one()}}; }

template <class F>
PhotonState map_photons(const PhotonState& state, F&& image_of) {
  PhotonState out;
  for (const auto& [term, amp] : state.terms()) {
    PhotonImage partial{{{}, amp}};
    for (const Photon& p : term) {
      PhotonImage img = image_of(p);
      PhotonImage next;
      next.reserve(partial.size() * img.size());
      for (const auto& [photons, a] : partial) {
        for (const auto& [extra, b] : img) {
          auto merged = photons;
          merged.insert(merged.end(), extra.begin(), extra.end());
          next.emplace_back(std::move(merged), a * b);
        }
      }
      partial = std::move(next);
    }
    for (auto& [photons, a] : partial) out.add(PhotonTerm(std::move(photons)), a);
  }
  return out;
}

bool contains(std::span<const Mode> modes, const Mode& m) {
  return std::find(modes.begin(), modes.end(), m) != modes.end();
}

std::string format_angle(double deg) {
  std::ostringstream os;
  os << deg;
  return os.str();
}

}  // namespace

PhotonState apply_hwp(const PhotonState& state, std::span<const Mode> modes, double angle_deg) {
  const bool diagonal = angle_deg == 22.5;
  if (!diagonal && angle_deg != 45.0) {
    throw Error(ErrorCode::UnsupportedAngle,
                "HWP at " + format_angle(angle_deg) + " deg leaves the exact amplitude ring");
  }
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    if (!contains(modes, p.mode)) return unchanged(p);
    Photon h = p, v = p;
    h.pol = Polarization::H;
    v.pol = Polarization::V;
    if (!diagonal) return {{{p.pol == Polarization::H ? v : h}, Amplitude::one()}};
    // H -> (H + V)/√2, V -> (H - V)/√2
    const Amplitude r = Amplitude::inv_sqrt2();
    return {{{h}, r}, {{v}, p.pol == Polarization::H ? r : -r}};
  });
}

PhotonState apply_hwp(const PhotonState& state, const Mode& mode, double angle_deg) {
  return apply_hwp(state, std::span<const Mode>(&mode, 1), angle_deg);
}

PhotonState apply_pbs(const PhotonState& state, const Pbs& pbs) {
  std::map<Mode, const PbsPort*> by_input;
  for (const auto& port : pbs.ports) by_input[port.in] = &port;
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    auto it = by_input.find(p.mode);
    if (it == by_input.end()) {
      if (pbs.strict) throw Error(ErrorCode::UnwiredMode, "photon in undeclared mode " + p.mode);
      return unchanged(p);
    }
    Photon q = p;
    q.mode = p.pol == Polarization::H ? it->second->h_out : it->second->v_out;
    return {{{q}, Amplitude::one()}};
  });
}

PhotonState apply_npbs(const PhotonState& state, const Mode& in1, const Mode& in2, const Mode& out1,
                       const Mode& out2) {
  const Amplitude r = Amplitude::inv_sqrt2();
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    if (p.mode != in1 && p.mode != in2) return unchanged(p);
    Photon a = p, b = p;
    a.mode = out1;
    b.mode = out2;
    return {{{a}, r}, {{b}, p.mode == in1 ? r : -r}};
  });
}

PhotonState apply_crystal(const PhotonState& state, const Crystal& crystal) {
  std::map<Mode, Mode> exit_of;
  for (const auto& route : crystal.routes) exit_of[route.in] = route.out;
  const unsigned max_depth = std::min(crystal.max_input_depth, FrequencyTag::kMaxDepth - 1);
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    auto it = exit_of.find(p.mode);
    if (it == exit_of.end() || p.pol != Polarization::H) return unchanged(p);
    if (p.freq.depth() > max_depth) {
      throw Error(ErrorCode::DepthExceeded,
                  "crystal " + std::to_string(crystal.id) + " got a photon at cascade depth " +
                      std::to_string(p.freq.depth()) + " (limit " + std::to_string(max_depth) + ")");
    }
    Photon signal{Polarization::H, it->second, p.bin, p.freq.signal()};
    Photon idler{Polarization::V, it->second, p.bin, p.freq.idler()};
    return {{{signal, idler}, Amplitude::one()}};
  });
}

PhotonState apply_crystal(const PhotonState& state, const Mode& mode, int crystal_id) {
  return apply_crystal(state, Crystal{crystal_id, {{mode, mode}}});
}

PhotonState apply_dm(const PhotonState& state, const Dm& dm) {
  std::map<Mode, const DmPort*> by_input;
  for (const auto& port : dm.ports) by_input[port.in] = &port;
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    auto it = by_input.find(p.mode);
    if (it == by_input.end()) return unchanged(p);
    Photon q = p;
    q.mode = p.freq.is_pump() ? it->second->pump_out : it->second->downconverted_out;
    return {{{q}, Amplitude::one()}};
  });
}

LongPassResult apply_longpass(const PhotonState& state, std::span<const Mode> modes) {
  LongPassResult r;
  for (const auto& [term, amp] : state.terms()) {
    bool pump_light = std::any_of(term.begin(), term.end(), [&](const Photon& p) {
      return p.freq.is_pump() && contains(modes, p.mode);
    });
    if (pump_light) {
      ++r.removed_terms;
    } else {
      r.state.add(term, amp);
    }
  }
  return r;
}

PhotonState apply_longpass(const PhotonState& state, const Mode& mode) {
  return apply_longpass(state, std::span<const Mode>(&mode, 1)).state;
}

PhotonState apply_delay_tagger(const PhotonState& state, const DelayTagger& tagger) {
  return map_photons(state, [&](const Photon& p) -> PhotonImage {
    const bool is_short = p.mode == tagger.short_in;
    if (!is_short && p.mode != tagger.long_in) return unchanged(p);
    if (p.bin != TimeBin::None) {
      throw Error(ErrorCode::DoubleTagging, "photon " + render(p) + " already carries a time bin");
    }
    Photon q = p;
    q.bin = is_short ? TimeBin::T1 : TimeBin::T2;
    q.mode = is_short ? tagger.short_out : tagger.long_out;
    return {{{q}, Amplitude::one()}};
  });
}

PhotonState apply_delay_tagger(const PhotonState& state, const Mode& short_mode,
                               const Mode& long_mode, const Mode& out_mode) {
  return apply_delay_tagger(state, DelayTagger{short_mode, long_mode, out_mode, out_mode});
}

PhotonState apply(const OpticalElement& element, const PhotonState& state,
                  std::size_t* removed_terms) {
  struct Visitor {
    const PhotonState& s;
    std::size_t* removed;
    PhotonState operator()(const Hwp& e) const { return apply_hwp(s, e.modes, e.angle_deg); }
    PhotonState operator()(const Pbs& e) const { return apply_pbs(s, e); }
    PhotonState operator()(const Npbs& e) const {
      return apply_npbs(s, e.in1, e.in2, e.out1, e.out2);
    }
    PhotonState operator()(const Dm& e) const { return apply_dm(s, e); }
    PhotonState operator()(const Crystal& e) const { return apply_crystal(s, e); }
    PhotonState operator()(const LongPass& e) const {
      auto r = apply_longpass(s, e.modes);
      if (removed) *removed += r.removed_terms;
      return std::move(r.state);
    }
    PhotonState operator()(const DelayTagger& e) const { return apply_delay_tagger(s, e); }
  };
  return std::visit(Visitor{state, removed_terms}, element.kind);
}

std::vector<Mode> input_modes(const ElementKind& kind) {
  struct Visitor {
    std::vector<Mode> operator()(const Hwp& e) const { return e.modes; }
    std::vector<Mode> operator()(const Pbs& e) const {
      std::vector<Mode> v;
      for (const auto& p : e.ports) v.push_back(p.in);
      return v;
    }
    std::vector<Mode> operator()(const Npbs& e) const { return {e.in1, e.in2}; }
    std::vector<Mode> operator()(const Dm& e) const {
      std::vector<Mode> v;
      for (const auto& p : e.ports) v.push_back(p.in);
      return v;
    }
    std::vector<Mode> operator()(const Crystal& e) const {
      std::vector<Mode> v;
      for (const auto& r : e.routes) v.push_back(r.in);
      return v;
    }
    std::vector<Mode> operator()(const LongPass& e) const { return e.modes; }
    std::vector<Mode> operator()(const DelayTagger& e) const { return {e.short_in, e.long_in}; }
  };
  return std::visit(Visitor{}, kind);
}

std::vector<Mode> output_modes(const ElementKind& kind) {
  struct Visitor {
    std::vector<Mode> operator()(const Hwp& e) const { return e.modes; }
    std::vector<Mode> operator()(const Pbs& e) const {
      std::vector<Mode> v;
      for (const auto& p : e.ports) {
        v.push_back(p.h_out);
        v.push_back(p.v_out);
      }
      return v;
    }
    std::vector<Mode> operator()(const Npbs& e) const { return {e.out1, e.out2}; }
    std::vector<Mode> operator()(const Dm& e) const {
      std::vector<Mode> v;
      for (const auto& p : e.ports) {
        v.push_back(p.pump_out);
        v.push_back(p.downconverted_out);
      }
      return v;
    }
    std::vector<Mode> operator()(const Crystal& e) const {
      std::vector<Mode> v;
      for (const auto& r : e.routes) {
        v.push_back(r.out);
        v.push_back(r.in);  // unconverted V light stays put
      }
      return v;
    }
    std::vector<Mode> operator()(const LongPass& e) const { return e.modes; }
    std::vector<Mode> operator()(const DelayTagger& e) const {
      return {e.short_out, e.long_out};
    }
  };
  return std::visit(Visitor{}, kind);
}

std::string describe(const OpticalElement& element) {
  struct Visitor {
    std::string operator()(const Hwp& e) const {
      std::string s = "HWP(" + format_angle(e.angle_deg) + ")";
      for (const auto& m : e.modes) s += " " + m;
      return s;
    }
    std::string operator()(const Pbs& e) const {
      std::string s = "PBS";
      for (const auto& p : e.ports) s += " " + p.in + ":H->" + p.h_out + ",V->" + p.v_out;
      return s;
    }
    std::string operator()(const Npbs& e) const {
      return "NPBS " + e.in1 + "->(" + e.out1 + "+" + e.out2 + ") " + e.in2 + "->(" + e.out1 +
             "-" + e.out2 + ")";
    }
    std::string operator()(const Dm& e) const {
      std::string s = "DM";
      for (const auto& p : e.ports) {
        s += " " + p.in + ":pump->" + p.pump_out + ",down->" + p.downconverted_out;
      }
      return s;
    }
    std::string operator()(const Crystal& e) const {
      std::string s = "CRYSTAL#" + std::to_string(e.id);
      for (const auto& r : e.routes) s += " " + r.in + "->" + r.out;
      return s;
    }
    std::string operator()(const LongPass& e) const {
      std::string s = "LP";
      for (const auto& m : e.modes) s += " " + m;
      return s;
    }
    std::string operator()(const DelayTagger& e) const {
      return "DELAY " + e.short_in + "->" + e.short_out + "[t_1] " + e.long_in + "->" +
             e.long_out + "[t_2]";
    }
  };
  return element.label + ": " + std::visit(Visitor{}, element.kind);
}

}  // namespace hyperent
