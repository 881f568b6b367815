#pragma once

// Distinguished lifts of Dehn twists to B(S^2, 2g+2), the global braid
// monodromy of a hyperelliptic factorization, and the lift-class decision
// (identity vs. full twist) for words whose mapping class is trivial.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/braid_word.hpp"
#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/mcg.hpp"

namespace lefschetz {

enum class LiftClass { Trivial, FullTwist, Undecided };

constexpr std::string_view to_string(LiftClass c) {
  switch (c) {
    case LiftClass::Trivial: return "Trivial";
    case LiftClass::FullTwist: return "FullTwist";
    case LiftClass::Undecided: return "Undecided";
  }
  return "Undecided";
}

/// sigma_1 for non-separating curves, (sigma_1 ... sigma_{2h})^{4h+2} for a
/// separating curve bounding genus h.
inline BraidWord liftCore(const CurveClass& curve) {
  const int n = curve.genus.branchPoints();
  if (!curve.kind.isSeparating()) return BraidWord::generator(n, Ambient::Spherical, 1);
  const int h = curve.kind.h();
  std::vector<int> block;
  for (int i = 1; i <= 2 * h; ++i) block.push_back(i);
  return BraidWord(n, Ambient::Spherical, block).power(4 * h + 2);
}

/// w * core * w^{-1}, the unique lift of the twist's image that is conjugate
/// to the core.
inline BraidWord distinguishedLift(const CurveClass& curve, const BraidWord& conjugator) {
  if (conjugator.strands() != curve.genus.branchPoints() || conjugator.ambient() != Ambient::Spherical)
    throw Error(ErrorCode::GenusMismatch, "conjugator braid for curve '" + curve.id + "' must be spherical on " +
                                              std::to_string(curve.genus.branchPoints()) + " strands");
  return liftCore(curve).conjugatedBy(conjugator);
}

/// Positional data: for each curve id, the braid conjugating the core to
/// that curve's lift.
using LiftData = std::map<std::string, BraidWord>;

namespace detail {

inline const BraidWord& liftConjugatorFor(const LiftData& data, const std::string& id) {
  auto it = data.find(id);
  if (it == data.end()) throw Error(ErrorCode::MissingLiftData, "no lift data for curve '" + id + "'");
  return it->second;
}

}  // namespace detail

/// Conjugator braid of a letter: L_{d1}^{-p1} ... L_{dk}^{-pk} w_c.
inline BraidWord letterConjugator(const FibrationSpec& spec, const TwistLetter& letter, const LiftData& data) {
  const int n = spec.genus.branchPoints();
  BraidWord x(n, Ambient::Spherical);
  for (const auto& entry : letter.conjugator) {
    const auto& d = spec.curve(entry.curve);
    x.append(distinguishedLift(d, detail::liftConjugatorFor(data, entry.curve)).power(-entry.power));
  }
  x.append(detail::liftConjugatorFor(data, letter.curve));
  return x;
}

inline BraidWord letterLift(const FibrationSpec& spec, const TwistLetter& letter, const LiftData& data) {
  return distinguishedLift(spec.curve(letter.curve), letterConjugator(spec, letter, data));
}

struct GlobalMonodromy {
  BraidWord word;               // product of the lifts, reduced at the seams
  std::vector<BraidWord> lifts;  // one per letter, in order
};

inline GlobalMonodromy globalBraidMonodromy(const FibrationSpec& spec, const LiftData& data) {
  GlobalMonodromy out{BraidWord(spec.genus.branchPoints(), Ambient::Spherical), {}};
  out.lifts.reserve(spec.letters.size());
  for (const auto& letter : spec.letters) {
    out.lifts.push_back(letterLift(spec, letter, data));
    out.word.append(out.lifts.back());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lift class.
//
// The kernel of B(S^2,n) -> M(S^2,n) is {1, D} with D the full twist, central
// of order two. The decision applies only these sound rules:
//   R1  D is central, so a literal occurrence of D (or D^{-1}) anywhere in
//       the word may be deleted, toggling the class;
//   R2  D^2 = 1, so classes add in Z/2;
//   R3  the class is invariant under conjugation (peeling x ... x^{-1});
//   R4  u u with u mapping to the identity has class Trivial, since u is 1
//       or D and both square to 1.
// The rim word is the identity of B(S^2,n) itself, so literal rim words are
// deleted alongside R1 without changing the class.
// Splitting a word into consecutive pieces that each map trivially combines
// R2 with independent decisions of the pieces.

enum class LiftRule : unsigned { Deletion = 1, Conjugation = 2, Rotation = 4, Square = 8, Split = 16, Sphere = 32 };

/// Class plus the set of rules that contributed to it.
struct LiftDecision {
  LiftClass cls = LiftClass::Undecided;
  unsigned rules = 0;

  bool used(LiftRule r) const { return rules & static_cast<unsigned>(r); }
};

struct LiftClassOptions {
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 0;  // permutes the order in which splits are tried
};

namespace detail {

class LiftClassSearch {
 public:
  LiftClassSearch(std::vector<BraidWord> pieces, const LiftClassOptions& options)
      : pieces_(std::move(pieces)), options_(options), rng_(options.seed) {
    const std::size_t k = pieces_.size();
    memo_.assign(k + 1, std::vector<std::optional<LiftClass>>(k + 1));
    trivialMemo_.assign(k + 1, std::vector<std::optional<McgVerdict>>(k + 1));
  }

  LiftClass run() { return interval(0, pieces_.size()); }
  unsigned rulesUsed() const { return rules_; }

 private:
  BraidWord join(std::size_t i, std::size_t j) const {
    BraidWord w(pieces_.front().strands(), Ambient::Spherical);
    for (std::size_t k = i; k < j; ++k) w.append(pieces_[k]);
    return w;
  }

  McgVerdict trivial(std::size_t i, std::size_t j) {
    auto& slot = trivialMemo_[i][j];
    if (!slot) slot = mcgImageTrivial(join(i, j), options_.budget);
    return *slot;
  }

  static int parity(LiftClass c) { return c == LiftClass::FullTwist ? 1 : 0; }
  static LiftClass fromParity(int p) { return p % 2 ? LiftClass::FullTwist : LiftClass::Trivial; }

  // R1: deletes literal full twists (toggling) and rim words (not toggling)
  // wherever they occur; returns the number of toggles.
  int deleteLiterals(std::vector<int>& letters, int n) {
    const auto twist = fullTwist(n);
    const std::vector<int> fwd(twist.letters().begin(), twist.letters().end());
    const std::vector<int> bwd = freegroup::inverse(fwd);
    int toggles = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t pos = 0; pos < letters.size() && !changed; ++pos) {
        if (rewrite::deleteSubword(letters, pos, fwd) || rewrite::deleteSubword(letters, pos, bwd)) {
          ++toggles;
          note(LiftRule::Deletion);
          changed = true;
        } else if (rewrite::deleteRim(letters, pos, n)) {
          note(LiftRule::Sphere);
          changed = true;
        }
        if (changed) letters = freegroup::reduce(letters);
      }
    }
    return toggles;
  }

  // Class of a word already known to map trivially, using word-level rules.
  // Peeling first keeps relators that straddle the conjugator intact;
  // deleting first exposes conjugators hidden behind relators. Both are tried.
  LiftClass decideWord(BraidWord w, int depth = 0) {
    w = w.freelyReduced();
    const LiftClass peeled = decideOrdered(w, depth, true);
    return peeled != LiftClass::Undecided ? peeled : decideOrdered(w, depth, false);
  }

  LiftClass decideOrdered(const BraidWord& w, int depth, bool peelFirst) {
    const int n = w.strands();
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    const std::size_t before = letters.size();
    if (peelFirst) {
      std::size_t k = 0;
      while (2 * k + 2 <= letters.size() && letters[k] == -letters[letters.size() - 1 - k]) ++k;
      letters.assign(letters.begin() + static_cast<std::ptrdiff_t>(k),
                     letters.end() - static_cast<std::ptrdiff_t>(k));
    }
    const bool peeledAny = letters.size() != before;
    if (peeledAny) note(LiftRule::Conjugation);
    const int toggles = deleteLiterals(letters, n);
    if (peeledAny && depth < 64) {
      const LiftClass inner = decideWord(BraidWord(n, Ambient::Spherical, letters), depth + 1);
      return inner == LiftClass::Undecided ? inner : fromParity(parity(inner) + toggles);
    }

    // R3: peel conjugating letters.
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
      ++lo;
      --hi;
    }
    std::vector<int> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                          letters.begin() + static_cast<std::ptrdiff_t>(hi));
    if (core.empty()) return fromParity(toggles);
    if (core.size() != letters.size() || toggles) {
      if (depth < 64) {
        const LiftClass inner = decideWord(BraidWord(n, Ambient::Spherical, core), depth + 1);
        if (inner != LiftClass::Undecided) {
          if (core.size() != letters.size()) note(LiftRule::Conjugation);
          return fromParity(parity(inner) + toggles);
        }
      }
      return LiftClass::Undecided;
    }
    // R3 again: a cyclic rotation is a conjugate. Only short cores are tried,
    // where a rotation can expose split literal relators.
    const std::size_t relatorLength = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
    if (core.size() <= 3 * relatorLength) {
      for (std::size_t r = 1; r < core.size(); ++r) {
        std::vector<int> rot(core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
        rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));
        rot = freegroup::reduce(rot);
        const int t = deleteLiterals(rot, n);
        if (rot.empty()) {
          note(LiftRule::Rotation);
          return fromParity(t);
        }
      }
    }
    // R4: u u with u mapping trivially.
    if (core.size() % 2 == 0) {
      const std::size_t half = core.size() / 2;
      if (std::equal(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(half),
                     core.begin() + static_cast<std::ptrdiff_t>(half))) {
        BraidWord u(n, Ambient::Spherical, std::vector<int>(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(half)));
        if (mcgImageTrivial(u, options_.budget) == McgVerdict::True) {
          note(LiftRule::Square);
          return LiftClass::Trivial;
        }
      }
    }
    return LiftClass::Undecided;
  }

  LiftClass interval(std::size_t i, std::size_t j) {
    auto& slot = memo_[i][j];
    if (slot) return *slot;
    slot = LiftClass::Undecided;  // guards re-entry

    LiftClass result = decideWord(join(i, j));
    if (result == LiftClass::Undecided && (j - i) % 2 == 0 && j - i >= 2) {
      const std::size_t mid = i + (j - i) / 2;
      if (join(i, mid) == join(mid, j) && trivial(i, mid) == McgVerdict::True) {
        note(LiftRule::Square);
        result = LiftClass::Trivial;
      }
    }
    if (result == LiftClass::Undecided) {
      std::vector<std::size_t> splits(j - i > 1 ? j - i - 1 : 0);
      std::iota(splits.begin(), splits.end(), i + 1);
      if (options_.seed != 0) std::shuffle(splits.begin(), splits.end(), rng_);
      for (std::size_t k : splits) {
        if (trivial(i, k) != McgVerdict::True) continue;
        const LiftClass left = interval(i, k);
        if (left == LiftClass::Undecided) continue;
        const LiftClass right = interval(k, j);
        if (right == LiftClass::Undecided) continue;
        result = fromParity(parity(left) + parity(right));
        note(LiftRule::Split);
        break;
      }
    }
    slot = result;
    return result;
  }

  void note(LiftRule r) { rules_ |= static_cast<unsigned>(r); }

  std::vector<BraidWord> pieces_;
  unsigned rules_ = 0;
  LiftClassOptions options_;
  std::mt19937_64 rng_;
  std::vector<std::vector<std::optional<LiftClass>>> memo_;
  std::vector<std::vector<std::optional<McgVerdict>>> trivialMemo_;
};

}  // namespace detail

/// Lift class of a word mapping to the identity of M(S^2,n). `pieces`, when
/// given, is a factorization shape: consecutive subwords whose product is
/// `w` (e.g. the per-letter lifts); splits are tried at piece boundaries.
inline LiftDecision liftDecision(const BraidWord& w, const std::vector<BraidWord>& pieces = {},
                                 const LiftClassOptions& options = {}) {
  const McgVerdict image = mcgImageTrivial(w, options.budget);
  if (image == McgVerdict::False)
    throw Error(ErrorCode::NotMcgTrivial, "word does not map to the identity mapping class");
  if (image == McgVerdict::Unknown) return {};
  if (w.freelyReduced().empty()) return {LiftClass::Trivial, 0};

  std::vector<BraidWord> shape = pieces;
  if (!shape.empty()) {
    BraidWord product(w.strands(), Ambient::Spherical);
    for (const auto& p : shape) product.append(p);
    if (product != w.freelyReduced())
      throw Error(ErrorCode::DimensionMismatch, "factorization shape does not multiply to the word");
  } else {
    shape = {w};
  }
  detail::LiftClassSearch search(std::move(shape), options);
  const LiftClass cls = search.run();
  return {cls, search.rulesUsed()};
}

inline LiftDecision liftDecision(const GlobalMonodromy& monodromy, const LiftClassOptions& options = {}) {
  return liftDecision(monodromy.word, monodromy.lifts, options);
}

inline LiftClass liftClass(const BraidWord& w, const std::vector<BraidWord>& pieces = {},
                           const LiftClassOptions& options = {}) {
  return liftDecision(w, pieces, options).cls;
}

inline LiftClass liftClass(const GlobalMonodromy& monodromy, const LiftClassOptions& options = {}) {
  return liftDecision(monodromy, options).cls;
}

}  // namespace lefschetz
