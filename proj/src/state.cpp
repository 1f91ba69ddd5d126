#include "hyperent/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hyperent/error.hpp"

namespace hyperent {

void DyadicSum::add_power(std::int32_t k) {
  ++bits_[k];
  carry();
}

void DyadicSum::carry() {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [k, count] : bits_) {
      if (count >= 2) {
        bits_[k - 1] += count / 2;
        count %= 2;
        changed = true;
        break;
      }
    }
  }
  std::erase_if(bits_, [](const auto& kv) { return kv.second == 0; });
}

bool DyadicSum::is_one() const {
  return bits_.size() == 1 && bits_.begin()->first == 0 && bits_.begin()->second == 1;
}

std::optional<std::int32_t> DyadicSum::as_power() const {
  if (bits_.size() != 1 || bits_.begin()->second != 1) return std::nullopt;
  return bits_.begin()->first;
}

double DyadicSum::value() const {
  double v = 0.0;
  for (const auto& [k, count] : bits_) v += static_cast<double>(count) * std::ldexp(1.0, -k);
  return v;
}

PhotonState PhotonState::single(std::vector<Photon> photons, Amplitude amp) {
  PhotonState s;
  s.add(PhotonTerm(std::move(photons)), amp);
  return s;
}

void PhotonState::add(const PhotonTerm& term, Amplitude amp) {
  auto it = terms_.find(term);
  if (it == terms_.end()) {
    terms_.emplace(term, amp);
    return;
  }
  if (auto sum = Amplitude::add(it->second, amp)) {
    it->second = *sum;
  } else {
    terms_.erase(it);
  }
}

PhotonState PhotonState::negated() const {
  PhotonState out = *this;
  for (auto& [term, amp] : out.terms_) amp = -amp;
  return out;
}

PhotonState PhotonState::boosted(std::uint32_t steps) const {
  PhotonState out = *this;
  for (auto& [term, amp] : out.terms_) amp = amp.boosted(steps);
  return out;
}

DyadicSum PhotonState::norm_squared() const {
  DyadicSum sum;
  for (const auto& [term, amp] : terms_) {
    sum.add_power(static_cast<std::int32_t>(amp.weight_exponent()));
  }
  return sum;
}

PhotonState add_term(PhotonState state, const PhotonTerm& term, Amplitude amp) {
  state.add(term, amp);
  return state;
}

bool states_equal(const PhotonState& a, const PhotonState& b, bool up_to_global_phase) {
  if (a == b) return true;
  return up_to_global_phase && a.negated() == b;
}

PhotonState strip_frequency(const PhotonState& state) {
  PhotonState out;
  for (const auto& [term, amp] : state.terms()) {
    std::vector<Photon> photons = term.photons();
    for (auto& p : photons) p.freq = FrequencyTag::pump();
    out.add(PhotonTerm(std::move(photons)), amp);
  }
  return out;
}

Restriction restrict_excluding(const PhotonState& state, std::span<const Mode> modes) {
  const std::set<Mode> excluded(modes.begin(), modes.end());
  Restriction r;
  for (const auto& [term, amp] : state.terms()) {
    bool hit = std::any_of(term.begin(), term.end(),
                           [&](const Photon& p) { return excluded.contains(p.mode); });
    if (hit) {
      r.discarded_weight.add_power(static_cast<std::int32_t>(amp.weight_exponent()));
      ++r.discarded_terms;
    } else {
      r.kept.add(term, amp);
    }
  }
  return r;
}

PhotonState renormalized(const PhotonState& state) {
  auto j = state.norm_squared().as_power();
  if (!j || *j < 0) {
    throw Error(ErrorCode::InexactAmplitude, "squared norm is not an exact power 2^-j");
  }
  return state.boosted(static_cast<std::uint32_t>(*j));
}

PhotonState ghz_product(std::span<const std::string> pol_patterns, std::span<const Slot> branch_a,
                        std::span<const Slot> branch_b) {
  if (pol_patterns.size() != 2) {
    throw Error(ErrorCode::PatternArity, "expected two polarization patterns, got " +
                                             std::to_string(pol_patterns.size()));
  }
  const std::size_t n = branch_a.size();
  if (branch_b.size() != n || pol_patterns[0].size() != n || pol_patterns[1].size() != n) {
    throw Error(ErrorCode::PatternArity, "polarization and slot patterns must all have length " +
                                             std::to_string(n));
  }
  PhotonState out;
  for (const auto& pattern : pol_patterns) {
    for (auto branch : {branch_a, branch_b}) {
      std::vector<Photon> photons;
      photons.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        const char c = pattern[i];
        if (c != 'H' && c != 'V') {
          throw Error(ErrorCode::PatternArity,
                      std::string("polarization pattern contains '") + c + "'");
        }
        photons.push_back(Photon{c == 'H' ? Polarization::H : Polarization::V, branch[i].mode,
                                 branch[i].bin, FrequencyTag::pump()});
      }
      out.add(PhotonTerm(std::move(photons)), Amplitude(+1, 2));
    }
  }
  return out;
}

bool tensor_factor_check(const PhotonState& state, std::span<const std::string> pol_patterns,
                         std::span<const Slot> branch_a, std::span<const Slot> branch_b) {
  const PhotonState target = ghz_product(pol_patterns, branch_a, branch_b);
  if (state.empty()) return false;
  return states_equal(strip_frequency(state), target, true);
}

bool frequency_forest_ok(const PhotonTerm& term, std::uint32_t pump_roots) {
  const auto& ph = term.photons();
  for (std::size_t i = 0; i < ph.size(); ++i) {
    for (std::size_t j = 0; j < ph.size(); ++j) {
      if (i != j && ph[i].freq.is_strict_ancestor_of(ph[j].freq)) return false;
    }
  }
  DyadicSum kraft;
  for (const auto& p : ph) kraft.add_power(static_cast<std::int32_t>(p.freq.depth()));
  DyadicSum expected;
  for (std::uint32_t r = 0; r < pump_roots; ++r) expected.add_power(0);
  return kraft == expected;
}

std::string render(const PhotonState& state, RenderOptions opts) {
  if (state.empty()) return "0\n";
  std::string out;
  for (const auto& [term, amp] : state.terms()) {
    out += amp.to_string();
    out += ' ';
    for (const auto& p : term) out += render(p, opts.with_freq);
    out += '\n';
  }
  return out;
}

}  // namespace hyperent
