#pragma once

// Rendering of an AnalysisReport: a versioned machine document (JSON, stable
// key order, no timestamps) and a short human text form.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "lefschetz/analysis.hpp"
#include "lefschetz/delpezzo.hpp"

namespace lefschetz {

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitUndecided = 3, kExitUnsupported = 4, kExitUsage = 64 };

/// 64-bit FNV-1a, hex.
inline std::string inputDigest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return "fnv1a64:" + out;
}

namespace detail {

inline std::string_view complexName(ComplexStructure c) {
  return c == ComplexStructure::Obstructed ? "Obstructed" : "Unknown";
}

}  // namespace detail

/// Strict mode fails on anything the engine left undecided: the lift class
/// and the numeric invariants. ComplexStructure::Unknown is an answer (no
/// obstruction found), not an undecided computation.
inline bool hasUndecided(const AnalysisReport& r) {
  return !r.liftClass || *r.liftClass == LiftClass::Undecided || !r.sigma || !r.h1;
}

inline int exitCodeFor(const AnalysisReport& r, bool strict) {
  return strict && hasUndecided(r) ? kExitUndecided : kExitOk;
}

inline Json toJson(const AnalysisReport& r, std::string_view digest) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input_digest"] = digest;
  j["genus"] = r.genus.value;
  j["letters"] = r.letterCount;
  j["reducible_fibers"] = r.reducibleFibers;

  Json inv;
  inv["chi"] = r.chi;
  inv["sigma"] = r.sigma ? Json(*r.sigma) : Json(nullptr);
  if (r.h1) {
    Json torsion = Json::array();
    for (const auto& t : r.h1->torsion) torsion.push_back(t.convert_to<std::int64_t>());
    inv["h1"] = Json{{"rank", r.h1->rank}, {"torsion", torsion}, {"text", r.h1->toString()}};
  } else {
    inv["h1"] = nullptr;
  }
  if (r.invariants) {
    inv["b1"] = r.invariants->b1;
    inv["b2plus"] = r.invariants->b2plus;
    inv["b2minus"] = r.invariants->b2minus;
  } else {
    inv["b1"] = inv["b2plus"] = inv["b2minus"] = nullptr;
  }
  inv["complex_structure"] = detail::complexName(r.complexStructure);
  j["invariants"] = std::move(inv);

  j["lift_class"] = r.liftClass ? Json(to_string(*r.liftClass)) : Json(nullptr);
  j["ambient"] = r.ambient ? Json(r.ambient->toString()) : Json(nullptr);
  j["y_class"] = Json{{"a", r.m ? Json(r.yClass.a) : Json("m")}, {"b", r.yClass.b}};
  j["blow_ups"] = Json{{"fiberwise_line", r.ledger.fiberwiseLineBlowups},
                       {"points", r.ledger.pointBlowups},
                       {"curves", r.ledger.curveBlowups},
                       {"chi_x", r.ledger.eulerCharacteristicX}};
  j["y_diffeo"] = r.yDiffeo.text;
  j["warnings"] = r.warnings;
  return j;
}

inline std::string machineReport(const AnalysisReport& r, std::string_view digest) {
  return toJson(r, digest).dump(2) + "\n";
}

inline std::string textReport(const AnalysisReport& r, std::string_view digest) {
  std::ostringstream os;
  os << "input      " << digest << "\n";
  os << "genus      " << r.genus.value << ", " << r.letterCount << " singular fibers (" << r.reducibleFibers
     << " reducible)\n";
  os << "chi        " << r.chi << "\n";
  os << "sigma      " << (r.sigma ? std::to_string(*r.sigma) : "unknown") << "\n";
  os << "H1         " << (r.h1 ? r.h1->toString() : "unknown") << "\n";
  if (r.invariants)
    os << "betti      b1 = " << r.invariants->b1 << ", b2+ = " << r.invariants->b2plus
       << ", b2- = " << r.invariants->b2minus << "\n";
  os << "complex    " << detail::complexName(r.complexStructure) << "\n";
  os << "lift       " << (r.liftClass ? std::string(to_string(*r.liftClass)) : "unavailable") << "\n";
  if (r.ambient) os << "ambient    " << r.ambient->toString() << "\n";
  os << "[Y]        " << (r.m ? std::to_string(r.yClass.a) : "m") << " A + " << r.yClass.b << " B\n";
  os << "blow-ups   " << r.ledger.fiberwiseLineBlowups << " fiberwise, " << r.ledger.pointBlowups << " points, "
     << r.ledger.curveBlowups.size() << " curves; chi(X) = " << r.ledger.eulerCharacteristicX << "\n";
  os << "Y          " << r.yDiffeo.text << "\n";
  for (const auto& w : r.warnings) os << "warning    " << w << "\n";
  return os.str();
}

inline std::string hypersurfaceText(const HypersurfaceData& d) {
  std::ostringstream os;
  os << to_string(d.diffeoType);
  if (d.diffeoType != DelPezzoType::Unsupported) {
    os << ", b2- = " << d.b2minus << "\n";
    os << "c1 = " << d.chern.c1 << " eta, c2 = " << d.chern.c2 << " eta^2\n";
    os << "chi = " << d.chi << ", sigma = " << d.sigma << ", spin = " << (d.spin ? "yes" : "no") << "\n";
  } else {
    os << ": " << d.reason << "\n";
  }
  return os.str();
}

}  // namespace lefschetz
