#pragma once

// Closed-form invariants of the total space of a Lefschetz fibration over S^2.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/homology.hpp"

namespace lefschetz {

enum class ComplexStructure { Obstructed, Unknown };

constexpr std::string_view to_string(ComplexStructure c) {
  return c == ComplexStructure::Obstructed ? "Obstructed" : "Unknown";
}

/// Certifies where pi_1 of a total space is known to be abelian, so that the
/// computed H1 stands in for pi_1.
struct Provenance {
  enum class Family { None, Mn };
  Family family = Family::None;
  std::int64_t n = 0;

  static Provenance none() { return {}; }
  static Provenance mn(std::int64_t n) { return {Family::Mn, n}; }

  bool certifiesAbelianPi1() const { return family == Family::Mn && n >= 1; }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct InvariantReport {
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t b1 = 0;
  std::int64_t b2plus = 0;
  std::int64_t b2minus = 0;
  AbelianGroup h1;
  ComplexStructure complexStructure = ComplexStructure::Unknown;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Handlebody count: 4 - 4g + k for k singular fibers.
constexpr std::int64_t eulerCharacteristic(Genus g, std::int64_t letterCount) {
  return 4 - 4 * static_cast<std::int64_t>(g.value) + letterCount;
}

/// Signature of Matsumoto's M_0 = (S^2 x T^2) # 4 CP^2-bar.
inline constexpr std::int64_t kMatsumotoBlockSignature = -4;

/// Novikov additivity over fiber-sum blocks.
inline std::int64_t signatureByAdditivity(const std::optional<std::vector<std::int64_t>>& blocks) {
  if (!blocks) throw Error(ErrorCode::MissingBlockData, "no block signatures declared");
  return std::accumulate(blocks->begin(), blocks->end(), std::int64_t{0});
}

inline std::int64_t signatureByAdditivity(const std::vector<std::int64_t>& blocks) {
  return std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0});
}

/// b2+ and b2- from chi, sigma and b1, assuming b3 = b1 (closed oriented).
inline InvariantReport bettiTable(std::int64_t chi, std::int64_t sigma, std::int64_t b1) {
  if (b1 < 0) throw Error(ErrorCode::InconsistentInvariants, "b1 must be non-negative");
  if ((sigma + chi) % 2 != 0) throw Error(ErrorCode::InconsistentInvariants, "sigma + chi must be even");
  InvariantReport r;
  r.chi = chi;
  r.sigma = sigma;
  r.b1 = b1;
  r.b2plus = (sigma + chi) / 2 - 1 + b1;
  r.b2minus = r.b2plus - sigma;
  if (r.b2plus < 0 || r.b2minus < 0)
    throw Error(ErrorCode::InconsistentInvariants,
                "negative b2 (b2+ = " + std::to_string(r.b2plus) + ", b2- = " + std::to_string(r.b2minus) + ")");
  return r;
}

inline InvariantReport blowUpAdjust(InvariantReport r, std::int64_t count) {
  r.chi += count;
  r.sigma -= count;
  r.b2minus += count;
  return r;
}

/// Obstructed only with a certificate that pi_1 = H1 = Z + Z_n (n >= 1) and
/// b2+ >= 1; anything else is Unknown.
inline ComplexStructure complexObstruction(const AbelianGroup& h1, std::int64_t b2plus, const Provenance& provenance) {
  if (!provenance.certifiesAbelianPi1()) return ComplexStructure::Unknown;
  if (b2plus < 1 || h1.rank != 1) return ComplexStructure::Unknown;
  if (provenance.n == 1) return h1.torsion.empty() ? ComplexStructure::Obstructed : ComplexStructure::Unknown;
  if (h1.torsion.size() != 1 || h1.torsion.front() != provenance.n) return ComplexStructure::Unknown;
  return ComplexStructure::Obstructed;
}

}  // namespace lefschetz
