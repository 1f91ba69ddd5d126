#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperent {

enum class Polarization : std::uint8_t { H, V };

constexpr Polarization flipped(Polarization p) {
  return p == Polarization::H ? Polarization::V : Polarization::H;
}

constexpr char to_char(Polarization p) { return p == Polarization::H ? 'H' : 'V'; }

/// Arrival slot of a photon. None is used by the spatial-mode scheme only.
enum class TimeBin : std::uint8_t { None, T1, T2 };

std::string to_string(TimeBin b);

/// Symbolic frequency label. The pump is the root of a binary tree; a
/// down-conversion of token t yields the two children 2t and 2t+1, so the
/// multiset of tokens in a term encodes the whole energy-splitting history.
class FrequencyTag {
 public:
  static constexpr unsigned kMaxDepth = 62;

  constexpr FrequencyTag() = default;
  static constexpr FrequencyTag pump() { return FrequencyTag(1); }
  static constexpr FrequencyTag from_token(std::uint64_t token) { return FrequencyTag(token); }

  constexpr std::uint64_t token() const { return token_; }
  constexpr bool is_pump() const { return token_ == 1; }
  constexpr unsigned depth() const {
    return static_cast<unsigned>(std::bit_width(token_)) - 1;
  }
  /// Child carried by the H-polarized (signal) photon of a conversion.
  constexpr FrequencyTag signal() const { return FrequencyTag(token_ << 1); }
  /// Child carried by the V-polarized (idler) photon.
  constexpr FrequencyTag idler() const { return FrequencyTag((token_ << 1) | 1); }
  constexpr bool is_strict_ancestor_of(FrequencyTag other) const {
    if (other.depth() <= depth()) return false;
    return (other.token_ >> (other.depth() - depth())) == token_;
  }

  friend constexpr auto operator<=>(FrequencyTag, FrequencyTag) = default;

 private:
  constexpr explicit FrequencyTag(std::uint64_t token) : token_(token) {}
  std::uint64_t token_ = 1;
};

using Mode = std::string;

struct Photon {
  Polarization pol = Polarization::H;
  Mode mode;
  TimeBin bin = TimeBin::None;
  FrequencyTag freq = FrequencyTag::pump();

  /// Canonical order: mode, then time bin, then polarization, then frequency.
  friend auto operator<=>(const Photon& a, const Photon& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    if (auto c = a.bin <=> b.bin; c != 0) return c;
    if (auto c = a.pol <=> b.pol; c != 0) return c;
    return a.freq <=> b.freq;
  }
  friend bool operator==(const Photon&, const Photon&) = default;
};

/// A product ket of distinguishable photons kept in canonical order.
class PhotonTerm {
 public:
  PhotonTerm() = default;
  /// Sorts into canonical order; throws DuplicateOccupancy if two photons
  /// share mode, time bin, polarization and frequency.
  explicit PhotonTerm(std::vector<Photon> photons);

  const std::vector<Photon>& photons() const { return photons_; }
  std::size_t size() const { return photons_.size(); }
  bool empty() const { return photons_.empty(); }
  auto begin() const { return photons_.begin(); }
  auto end() const { return photons_.end(); }

  friend auto operator<=>(const PhotonTerm&, const PhotonTerm&) = default;
  friend bool operator==(const PhotonTerm&, const PhotonTerm&) = default;

 private:
  std::vector<Photon> photons_;
};

PhotonTerm canonicalize(std::span<const Photon> photons);

/// "|H⟩_{a_1}" / "|Ht_1⟩_{b}"; with_freq appends the frequency token.
std::string render(const Photon& p, bool with_freq = false);

}  // namespace hyperent
