#pragma once

// Homology and blow-up bookkeeping for the ambient 6-manifold X, a blow-up of
// a CP^2-bundle over S^2 that contains the total space Y as a submanifold.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/lift.hpp"

namespace lefschetz {

/// a A + b B, A the fiber class and B the CP^1-subbundle class.
struct H4Class {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend H4Class operator+(H4Class x, H4Class y) { return {x.a + y.a, x.b + y.b}; }
  friend bool operator==(H4Class, H4Class) = default;
};

/// alpha (line in a fiber) and beta (section class).
struct H2Class {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(H2Class, H2Class) = default;
};

// A.alpha = 0, A.beta = 1, B.alpha = 1, B.beta = 0.
constexpr std::int64_t intersect(H4Class y, H2Class gamma) { return y.a * gamma.beta + y.b * gamma.alpha; }

struct YClass {
  H4Class cls;
  // The resolved Y is determined up to homology by these three numbers.
  Genus genus;
  std::int64_t m = 0;
  std::size_t reducibleFibers = 0;

  friend bool operator==(const YClass&, const YClass&) = default;
};

/// [Y] = m A + (2g+2) B.
constexpr H4Class classOfY(Genus g, std::int64_t m) { return {m, 2 * static_cast<std::int64_t>(g.value) + 2}; }

inline YClass classOfY(const FibrationSpec& spec, std::int64_t m) {
  return {classOfY(spec.genus, m), spec.genus, m, countReducible(spec)};
}

struct AmbientDescriptor {
  enum class Bundle { TrivialProduct, Twisted };
  Bundle bundle = Bundle::TrivialProduct;
  Genus genus;
  // Only meaningful for Twisted: the twisted bundle is still trivial iff g = 1 mod 3.
  bool twistedIsTrivialBundle = false;

  std::string toString() const {
    if (bundle == Bundle::TrivialProduct) return "S2 x CP2";
    return "twisted CP2-bundle (g = " + std::to_string(genus.value) + ", " +
           (twistedIsTrivialBundle ? "trivial as a bundle" : "nontrivial") + ")";
  }

  friend bool operator==(const AmbientDescriptor&, const AmbientDescriptor&) = default;
};

inline AmbientDescriptor bundleType(LiftClass lc, Genus g) {
  switch (lc) {
    case LiftClass::Trivial: return {AmbientDescriptor::Bundle::TrivialProduct, g, false};
    case LiftClass::FullTwist: return {AmbientDescriptor::Bundle::Twisted, g, g.value % 3 == 1};
    case LiftClass::Undecided: break;
  }
  throw Error(ErrorCode::UndecidedLift, "bundle type needs a decided lift class");
}

/// Blow-ups turning the singular model into the smooth pair (X, Y).
struct BlowUpLedger {
  std::int64_t fiberwiseLineBlowups = 0;  // g + 1, along the fiberwise line locus
  std::int64_t pointBlowups = 0;          // 2 per reducible fiber
  std::vector<std::int64_t> curveBlowups;  // 2h - 1 per Separating(h) letter
  std::int64_t eulerCharacteristicX = 0;

  friend bool operator==(const BlowUpLedger&, const BlowUpLedger&) = default;
};

// chi(S^2 x CP^2).
inline constexpr std::int64_t kAmbientBaseEuler = 6;
// Blowing up a point of a 6-manifold replaces it by CP^2: chi + 2.
inline constexpr std::int64_t kPointBlowupEuler = 2;
// Blowing up an embedded CP^1 replaces it by a CP^1-bundle over CP^1: chi + 4 - 2.
inline constexpr std::int64_t kCurveBlowupEuler = 2;
// Per reducible fiber the local model needs g + 3 point blow-ups; g + 1 of them
// are the shared fiberwise ones, which leaves this many global point blow-ups.
inline constexpr std::int64_t kPointBlowupsPerReducible = 2;

inline BlowUpLedger blowUpLedger(const FibrationSpec& spec) {
  BlowUpLedger ledger;
  ledger.fiberwiseLineBlowups = spec.genus.value + 1;
  ledger.eulerCharacteristicX = kAmbientBaseEuler + kCurveBlowupEuler * ledger.fiberwiseLineBlowups;
  for (const auto& letter : spec.letters) {
    const auto& kind = spec.curve(letter.curve).kind;
    if (!kind.isSeparating()) continue;
    const std::int64_t curves = 2 * kind.h() - 1;
    ledger.pointBlowups += kPointBlowupsPerReducible;
    ledger.curveBlowups.push_back(curves);
    ledger.eulerCharacteristicX += kPointBlowupsPerReducible * kPointBlowupEuler + curves * kCurveBlowupEuler;
  }
  return ledger;
}

struct YDiffeoDescriptor {
  std::size_t reducibleFibers = 0;
  std::string text;

  friend bool operator==(const YDiffeoDescriptor&, const YDiffeoDescriptor&) = default;
};

/// Y is the total space M blown up once at each reducible singular point.
inline YDiffeoDescriptor yDiffeoDescriptor(const FibrationSpec& spec, std::string_view totalSpace = "M") {
  const std::size_t n0 = countReducible(spec);
  return {n0, std::string(totalSpace) + " # " + std::to_string(n0) + "·CP2bar"};
}

}  // namespace lefschetz
