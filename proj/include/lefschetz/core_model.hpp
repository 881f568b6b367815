#pragma once

// Domain model for Lefschetz fibration monodromy data: curves on a closed
// genus-g surface (carried as homology vectors plus a separating tag), Dehn
// twist letters, and the fibration spec that orders them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefschetz/error.hpp"

namespace lefschetz {

using Integer = boost::multiprecision::cpp_int;
using HomologyVector = std::vector<Integer>;

struct Genus {
  int value = 0;

  constexpr int rank() const { return 2 * value; }
  // Number of branch points of the hyperelliptic quotient.
  constexpr int branchPoints() const { return 2 * value + 2; }

  friend constexpr bool operator==(Genus, Genus) = default;
};

class CurveKind {
 public:
  static constexpr CurveKind nonSeparating() { return CurveKind(0); }
  static constexpr CurveKind separating(int h) { return CurveKind(h); }

  constexpr bool isSeparating() const { return h_ != 0; }
  // Genus of the bounded subsurface; 0 for non-separating curves.
  constexpr int h() const { return h_; }

  friend constexpr bool operator==(CurveKind, CurveKind) = default;

 private:
  constexpr explicit CurveKind(int h) : h_(h) {}
  int h_;
};

struct CurveClass {
  std::string id;
  Genus genus;
  CurveKind kind = CurveKind::nonSeparating();
  // Coordinates in the symplectic basis a1, b1, ..., ag, bg.
  HomologyVector vector;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct ConjugatorEntry {
  std::string curve;
  std::int64_t power = 0;

  friend bool operator==(const ConjugatorEntry&, const ConjugatorEntry&) = default;
};

/// A positive Dehn twist along the image of `curve` under the twist powers
/// in `conjugator`. The list reads outermost first: [(d1,p1),(d2,p2)] is the
/// curve tau_{d1}^{p1}(tau_{d2}^{p2}(curve)).
struct TwistLetter {
  std::string curve;
  std::vector<ConjugatorEntry> conjugator;

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Prepends (curve, power) as the new outermost conjugator, merging with an
/// existing outermost entry on the same curve so that opposite powers cancel
/// back to the original letter.
inline TwistLetter prependConjugator(TwistLetter letter, const ConjugatorEntry& entry) {
  if (entry.power == 0) return letter;
  auto& conj = letter.conjugator;
  if (!conj.empty() && conj.front().curve == entry.curve) {
    conj.front().power += entry.power;
    if (conj.front().power == 0) conj.erase(conj.begin());
  } else {
    conj.insert(conj.begin(), entry);
  }
  return letter;
}

inline TwistLetter prependConjugators(TwistLetter letter, const std::vector<ConjugatorEntry>& outer) {
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) letter = prependConjugator(std::move(letter), *it);
  return letter;
}

struct FibrationSpec {
  Genus genus;
  std::vector<CurveClass> curves;
  std::vector<TwistLetter> letters;
  bool hasSection = false;
  std::optional<std::vector<std::int64_t>> blockSignatures;

  const CurveClass* findCurve(const std::string& id) const {
    auto it = std::find_if(curves.begin(), curves.end(), [&](const CurveClass& c) { return c.id == id; });
    return it == curves.end() ? nullptr : &*it;
  }

  const CurveClass& curve(const std::string& id) const {
    if (const auto* c = findCurve(id)) return *c;
    throw Error(ErrorCode::InvariantViolation, "unknown curve id '" + id + "'");
  }

  friend bool operator==(const FibrationSpec&, const FibrationSpec&) = default;
};

namespace detail {

inline Integer vectorGcd(const HomologyVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

}  // namespace detail

/// Checks the curve invariants for a curve on a surface of genus `genus`.
inline void validateCurve(const CurveClass& c, Genus genus) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::InvariantViolation, what + " (curve '" + c.id + "')");
  };
  if (c.id.empty()) fail("curve id must be non-empty");
  if (c.genus != genus) fail("curve genus differs from spec genus");
  if (static_cast<int>(c.vector.size()) != genus.rank()) fail("homology vector must have length 2g");
  if (c.kind.isSeparating()) {
    const int h = c.kind.h();
    if (h <= 0 || 2 * h > genus.value) fail("separating type h must satisfy 0 < h <= g/2");
    if (detail::vectorGcd(c.vector) != 0) fail("separating curve must have zero homology class");
  } else {
    if (detail::vectorGcd(c.vector) != 1) fail("non-separating curve must have a primitive nonzero class");
  }
}

inline void validate(const FibrationSpec& spec) {
  if (spec.genus.value < 1) throw Error(ErrorCode::InvariantViolation, "genus must be at least 1");
  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    validateCurve(spec.curves[i], spec.genus);
    for (std::size_t j = 0; j < i; ++j)
      if (spec.curves[j].id == spec.curves[i].id)
        throw Error(ErrorCode::InvariantViolation, "duplicate curve id '" + spec.curves[i].id + "'");
  }
  for (const auto& letter : spec.letters) {
    spec.curve(letter.curve);
    for (const auto& entry : letter.conjugator) spec.curve(entry.curve);
  }
}

inline std::size_t countReducible(const FibrationSpec& spec) {
  return static_cast<std::size_t>(std::count_if(spec.letters.begin(), spec.letters.end(), [&](const TwistLetter& l) {
    return spec.curve(l.curve).kind.isSeparating();
  }));
}

}  // namespace lefschetz
