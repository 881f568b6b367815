#pragma once

// Fiber sums, the n-fold twisting construction, Matsumoto's genus-2
// fibration f0 and the family M(n) = (M0 #_id M0) #_{tau_c^n} (M0 #_id M0).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/braid_word.hpp"
#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/lift.hpp"

namespace lefschetz {

/// Curves of Matsumoto's relation (t_{c1} t_{c2} t_{c3} t_{c4})^2 = 1 on the
/// genus-2 surface, plus the twisting curve c, each with its positional lift
/// data in B(S^2, 6).
struct CurveTable {
  std::array<CurveClass, 4> cycles;
  CurveClass twist;
  LiftData lifts;
};

namespace detail {

inline HomologyVector vec(std::initializer_list<int> xs) {
  HomologyVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline BraidWord sphere6(std::vector<int> letters) { return BraidWord(6, Ambient::Spherical, std::move(letters)); }

}  // namespace detail

/// Class of the curve over the arc of sigma_j in the standard chain for
/// genus g: a1, b1, a2 - a1, b2, a3 - a2, ..., ending with a_g on 2g+2 strands.
inline CurveClass chainCurve(Genus g, int j) {
  if (j < 1 || j > 2 * g.value + 1) throw Error(ErrorCode::OutOfRange, "chain index out of range");
  HomologyVector v(static_cast<std::size_t>(g.rank()), Integer(0));
  if (j % 2 == 0) {
    v[static_cast<std::size_t>(j - 1)] = 1;  // b_{j/2}
  } else {
    const int i = (j + 1) / 2;  // a_i - a_{i-1}, or a_g at the end
    if (i > g.value) v[static_cast<std::size_t>(2 * (g.value - 1))] = 1;
    else v[static_cast<std::size_t>(2 * (i - 1))] = 1;
    if (i >= 2 && i <= g.value) v[static_cast<std::size_t>(2 * (i - 2))] = -1;
  }
  return {"s" + std::to_string(j), g, CurveKind::nonSeparating(), std::move(v)};
}

/// H1 action of a braid word through the hyperelliptic quotient; the first
/// letter acts first.
inline IntegerMatrix braidH1Action(Genus g, const BraidWord& w) {
  IntegerMatrix m = IntegerMatrix::identity(static_cast<std::size_t>(g.rank()));
  for (int l : w.letters()) m = transvectionMatrix(chainCurve(g, l > 0 ? l : -l), l > 0 ? 1 : -1) * m;
  return m;
}

/// Class of the non-separating curve whose twist lifts to X sigma_1 X^{-1}:
/// the image of a1 under the inverse action of X.
inline HomologyVector liftedCurveClass(Genus g, const BraidWord& conjugator) {
  return braidH1Action(g, conjugator.inverse()) * chainCurve(g, 1).vector;
}

/// The shipped table, reproduced by tools/derive_curve_table.
///
/// Vectors are in the basis (a1, b1, a2, b2) with <a_i, b_i> = 1; the chain
/// sigma_1..sigma_5 lifts to curves of classes a1, b1, a2 - a1, b2, a2. c1, c2,
/// c3 are half-twist lifts (conjugates of sigma_1); c4 bounds a genus-1
/// subsurface and lifts to (sigma_1 sigma_2)^6. The twisting curve c lifts to
/// sigma_1 itself.
inline CurveTable standardCurveTable() {
  using detail::sphere6;
  using detail::vec;
  const Genus g{2};
  CurveTable t{
      {CurveClass{"c1", g, CurveKind::nonSeparating(), vec({-1, 0, 0, 1})},
       CurveClass{"c2", g, CurveKind::nonSeparating(), vec({-1, 1, 1, 1})},
       CurveClass{"c3", g, CurveKind::nonSeparating(), vec({0, 1, 1, 0})},
       CurveClass{"c4", g, CurveKind::separating(1), vec({0, 0, 0, 0})}},
      CurveClass{"c", g, CurveKind::nonSeparating(), vec({1, 0, 0, 0})},
      {}};
  t.lifts.emplace("c1", sphere6({-5, -4, 2, 3, 1, 2}));
  t.lifts.emplace("c2", sphere6({-4, -3, 1, 2}));
  t.lifts.emplace("c3", sphere6({-3, -2}));
  t.lifts.emplace("c4", sphere6({}));
  t.lifts.emplace("c", sphere6({}));
  return t;
}

/// Outcome of each constraint the curve table must satisfy.
struct CurveTableCheck {
  bool kinds = false;                // c1..c3, c non-separating; c4 Separating(1)
  bool entriesInBox = false;         // vector entries in [-2, 2]
  bool monodromyIdentity = false;    // (T1 T2 T3 T4)^2 = I on H1
  bool cokernelZ2 = false;           // Z^4 / <c1..c4> = Z^2
  bool twistedCokernels = false;     // Z^4 / <ci, T_c^n ci> = Z + Z_n, n = 1, 2, 3
  bool twistPairsNontrivially = false;  // <ci, c> != 0 for some i
  bool liftsMapTrivially = false;    // the f0 lift word squared maps to 1 in M(S^2,6)

  bool allHold() const {
    return kinds && entriesInBox && monodromyIdentity && cokernelZ2 && twistedCokernels && twistPairsNontrivially &&
           liftsMapTrivially;
  }
};

inline CurveTableCheck verifyCurveTable(const CurveTable& t) {
  CurveTableCheck check;
  const Genus g{2};
  check.kinds = !t.cycles[0].kind.isSeparating() && !t.cycles[1].kind.isSeparating() &&
                !t.cycles[2].kind.isSeparating() && t.cycles[3].kind == CurveKind::separating(1) &&
                !t.twist.kind.isSeparating();
  for (const auto& c : t.cycles) validateCurve(c, g);
  validateCurve(t.twist, g);

  check.entriesInBox = true;
  auto inBox = [&](const CurveClass& c) {
    for (const auto& x : c.vector)
      if (x < -2 || x > 2) check.entriesInBox = false;
  };
  for (const auto& c : t.cycles) inBox(c);
  inBox(t.twist);

  IntegerMatrix block = IntegerMatrix::identity(4);
  for (const auto& c : t.cycles) block = transvectionMatrix(c, 1) * block;
  check.monodromyIdentity = (block * block).isIdentity();

  std::vector<HomologyVector> cols;
  for (const auto& c : t.cycles) cols.push_back(c.vector);
  check.cokernelZ2 = cokernel(IntegerMatrix::fromColumns(4, cols)) == AbelianGroup{2, {}};

  check.twistedCokernels = true;
  for (int n = 1; n <= 3; ++n) {
    auto twisted = cols;
    for (const auto& c : t.cycles) twisted.push_back(transvect(t.twist, c.vector, n));
    const AbelianGroup expected = n == 1 ? AbelianGroup{1, {}} : AbelianGroup{1, {Integer(n)}};
    if (cokernel(IntegerMatrix::fromColumns(4, twisted)) != expected) check.twistedCokernels = false;
  }

  for (const auto& c : t.cycles)
    if (symplecticPairing(c.vector, t.twist.vector, g) != 0) check.twistPairsNontrivially = true;

  BraidWord block6(6, Ambient::Spherical);
  for (const auto& c : t.cycles) {
    auto it = t.lifts.find(c.id);
    if (it == t.lifts.end()) return check;
    block6.append(distinguishedLift(c, it->second));
  }
  check.liftsMapTrivially = mcgImageTrivial(block6.power(2)) == McgVerdict::True;
  return check;
}

// ---------------------------------------------------------------------------

namespace detail {

inline void mergeCurve(std::vector<CurveClass>& curves, const CurveClass& c) {
  for (const auto& existing : curves) {
    if (existing.id != c.id) continue;
    if (existing != c) throw Error(ErrorCode::InvariantViolation, "conflicting definitions of curve '" + c.id + "'");
    return;
  }
  curves.push_back(c);
}

}  // namespace detail

/// s1 #_phi s2: letters of s1, then the letters of s2 carried by phi.
inline FibrationSpec fiberSum(const FibrationSpec& s1, const FibrationSpec& s2,
                              const std::vector<std::pair<CurveClass, std::int64_t>>& phi = {}) {
  if (s1.genus != s2.genus) throw Error(ErrorCode::GenusMismatch, "fiber sum of different genera");
  FibrationSpec out;
  out.genus = s1.genus;
  out.curves = s1.curves;
  for (const auto& c : s2.curves) detail::mergeCurve(out.curves, c);
  std::vector<ConjugatorEntry> outer;
  for (const auto& [c, power] : phi) {
    if (c.genus != s1.genus) throw Error(ErrorCode::GenusMismatch, "gluing map curve of a different genus");
    detail::mergeCurve(out.curves, c);
    outer.push_back({c.id, power});
  }
  out.letters = s1.letters;
  for (const auto& letter : s2.letters) out.letters.push_back(prependConjugators(letter, outer));
  out.hasSection = s1.hasSection && s2.hasSection;
  if (s1.blockSignatures && s2.blockSignatures) {
    out.blockSignatures = *s1.blockSignatures;
    out.blockSignatures->insert(out.blockSignatures->end(), s2.blockSignatures->begin(), s2.blockSignatures->end());
  }
  return out;
}

/// Letters [from, to) as a spec of their own (same curves and genus).
inline FibrationSpec subFactorization(const FibrationSpec& s, std::size_t from, std::size_t to) {
  FibrationSpec sub;
  sub.genus = s.genus;
  sub.curves = s.curves;
  sub.hasSection = s.hasSection;
  sub.letters.assign(s.letters.begin() + static_cast<std::ptrdiff_t>(from),
                     s.letters.begin() + static_cast<std::ptrdiff_t>(to));
  return sub;
}

/// n-fold twisting along c of the letters after `splitIndex`. Requires the
/// global braid monodromy of those letters to be trivial; the ambient
/// homology class of the associated submanifold is unchanged.
inline FibrationSpec twistDeformation(const FibrationSpec& s, std::size_t splitIndex, const CurveClass& c,
                                      std::int64_t n, const LiftData& lifts, const LiftClassOptions& options = {}) {
  if (splitIndex > s.letters.size()) throw Error(ErrorCode::OutOfRange, "split index beyond the letter count");
  if (c.genus != s.genus) throw Error(ErrorCode::GenusMismatch, "twisting curve of a different genus");
  if (n == 0) return s;

  const auto tail = subFactorization(s, splitIndex, s.letters.size());
  LiftClass lc = LiftClass::Undecided;
  try {
    lc = liftClass(globalBraidMonodromy(tail, lifts), options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMcgTrivial) throw;
    throw Error(ErrorCode::LiftNotTrivial, "letters after the split do not map to the identity mapping class");
  }
  if (lc == LiftClass::Undecided)
    throw Error(ErrorCode::LiftUndecided, "could not decide the lift class of the twisted block");
  if (lc == LiftClass::FullTwist)
    throw Error(ErrorCode::LiftNotTrivial, "global braid monodromy of the twisted block is the full twist");

  FibrationSpec out = s;
  detail::mergeCurve(out.curves, c);
  for (std::size_t i = splitIndex; i < out.letters.size(); ++i)
    out.letters[i] = prependConjugator(std::move(out.letters[i]), {c.id, n});
  return out;
}

inline FibrationSpec matsumotoFibration(const CurveTable& table) {
  FibrationSpec f;
  f.genus = Genus{2};
  f.curves.assign(table.cycles.begin(), table.cycles.end());
  for (int rep = 0; rep < 2; ++rep)
    for (const auto& c : table.cycles) f.letters.push_back({c.id, {}});
  f.hasSection = true;
  f.blockSignatures = std::vector<std::int64_t>{kMatsumotoBlockSignature};
  return f;
}

/// Letter index where the twisted half of M(n) starts.
inline constexpr std::size_t kMnSplitIndex = 16;

inline FibrationSpec familyMn(std::int64_t n, const CurveTable& table) {
  const auto f0 = matsumotoFibration(table);
  const auto doubled = fiberSum(f0, f0);
  return fiberSum(doubled, doubled, {{table.twist, n}});
}

}  // namespace lefschetz
