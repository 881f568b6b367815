#pragma once

// Deciding whether a spherical braid word maps to the identity of the
// mapping class group M(S^2,n).
//
// Tiers, cheapest first:
//   1. the permutation must be trivial;
//   2. the degree must vanish in the abelianization Z/((n-1) gcd(2,n));
//   3. the Artin action on pi_1(S^2 - n points) = F_{n-1} must be inner.
//      M(S^2,n) embeds in Out(F_{n-1}), so this tier is exact; it is bounded
//      by the total length of the free-group images it builds;
//   4. if tier 3 runs out of budget, a best-first rewrite search with the
//      four relation families of M(S^2,n), shortlex ordered.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/braid_word.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

enum class McgVerdict { False, True, Unknown };

constexpr std::string_view to_string(McgVerdict v) {
  switch (v) {
    case McgVerdict::False: return "false";
    case McgVerdict::True: return "true";
    case McgVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct McgDecision {
  McgVerdict verdict = McgVerdict::Unknown;
  int tier = 0;  // which tier settled the verdict
};

/// Order of the abelianization of M(S^2,n).
inline std::int64_t mcgAbelianOrder(int strands) {
  return static_cast<std::int64_t>(strands - 1) * std::gcd(2, strands);
}

namespace freegroup {

using Word = std::vector<int>;

inline void pushReduced(Word& w, int x) {
  if (!w.empty() && w.back() == -x) w.pop_back();
  else w.push_back(x);
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) pushReduced(out, x);
  return out;
}

/// Images of x_1..x_n under the Artin automorphism of the word, or nullopt
/// once the images exceed `budget` letters in total.
inline std::optional<std::vector<Word>> artinImages(const BraidWord& w, std::size_t budget) {
  const int n = w.strands();
  std::vector<Word> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = {i + 1};
  std::size_t total = static_cast<std::size_t>(n);
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    Word a = img[i], b = img[i + 1];
    Word conj;
    if (l > 0) {
      // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
      conj = a;
      for (int x : b) pushReduced(conj, x);
      for (int x : inverse(a)) pushReduced(conj, x);
      total = total - img[i].size() - img[i + 1].size() + conj.size() + a.size();
      img[i] = std::move(conj);
      img[i + 1] = std::move(a);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
      conj = inverse(b);
      for (int x : a) pushReduced(conj, x);
      for (int x : b) pushReduced(conj, x);
      total = total - img[i].size() - img[i + 1].size() + b.size() + conj.size();
      img[i] = std::move(b);
      img[i + 1] = std::move(conj);
    }
    if (total > budget) return std::nullopt;
  }
  return img;
}

/// Substitutes x_n = (x_1 ... x_{n-1})^{-1}, landing in F_{n-1}.
inline Word eliminateLast(const Word& w, int n) {
  Word out;
  for (int x : w) {
    if (std::abs(x) != n) {
      pushReduced(out, x);
    } else if (x > 0) {
      for (int k = n - 1; k >= 1; --k) pushReduced(out, -k);
    } else {
      for (int k = 1; k <= n - 1; ++k) pushReduced(out, k);
    }
  }
  return out;
}

/// True when images[i] = g x_{i+1} g^{-1} for one g and all i.
inline bool isInner(const std::vector<Word>& images) {
  const Word& w0 = images.front();
  if (w0.size() % 2 == 0) return false;
  const std::size_t k = w0.size() / 2;
  if (w0[k] != 1) return false;
  Word u(w0.begin(), w0.begin() + static_cast<std::ptrdiff_t>(k));
  Word tail(w0.begin() + static_cast<std::ptrdiff_t>(k + 1), w0.end());
  if (tail != inverse(u)) return false;
  // g = u x_1^m with m fixed by the remaining generators.
  std::optional<std::int64_t> m;
  const Word uInv = inverse(u);
  for (std::size_t i = 1; i < images.size(); ++i) {
    Word t = uInv;
    for (int x : images[i]) pushReduced(t, x);
    for (int x : u) pushReduced(t, x);
    const int gen = static_cast<int>(i + 1);
    std::size_t j = 0;
    std::int64_t power = 0;
    while (j < t.size() && std::abs(t[j]) == 1) power += t[j++] > 0 ? 1 : -1;
    // t must read x_1^power x_gen x_1^{-power}
    if (t.size() != 2 * j + 1 || t[j] != gen) return false;
    for (std::size_t r = 0; r < j; ++r)
      if (t[j + 1 + r] != -t[j - 1 - r]) return false;
    if (m && *m != power) return false;
    m = power;
  }
  return true;
}

}  // namespace freegroup

namespace detail {

struct RelationPiece {
  std::vector<int> lhs;  // nonempty
  std::vector<int> rhs;  // lhs = rhs in the group
};

inline std::vector<std::vector<int>> mcgRelators(int n) {
  std::vector<std::vector<int>> rel;
  for (int i = 1; i + 1 < n; ++i) rel.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rel.push_back({i, j, -i, -j});
  const auto rim = rimWord(n);
  rel.emplace_back(rim.letters().begin(), rim.letters().end());
  const auto twist = fullTwist(n);
  rel.emplace_back(twist.letters().begin(), twist.letters().end());
  return rel;
}

/// Every way of reading a cyclic conjugate of a relator (or its inverse) as
/// lhs * rhs^{-1} = 1.
inline std::vector<RelationPiece> relationPieces(int n) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& r : mcgRelators(n)) {
    for (const auto& rr : {r, freegroup::inverse(r)}) {
      for (std::size_t rot = 0; rot < rr.size(); ++rot) {
        std::vector<int> c(rr.begin() + static_cast<std::ptrdiff_t>(rot), rr.end());
        c.insert(c.end(), rr.begin(), rr.begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t s = 1; s <= c.size(); ++s) {
          std::vector<int> lhs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(s));
          std::vector<int> rest(c.begin() + static_cast<std::ptrdiff_t>(s), c.end());
          seen.emplace(std::move(lhs), freegroup::inverse(rest));
        }
      }
    }
  }
  std::vector<RelationPiece> out;
  for (auto& [l, r] : seen) out.push_back({l, r});
  return out;
}

struct Shortlex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

/// Best-first search for the empty word; true when found within `budget`
/// expanded states.
inline bool rewriteToIdentity(const BraidWord& w, std::size_t budget) {
  const int n = w.strands();
  const auto pieces = relationPieces(n);
  std::size_t maxRel = 0;
  for (const auto& p : pieces) maxRel = std::max(maxRel, p.lhs.size() + p.rhs.size());
  const auto start = freegroup::reduce(std::vector<int>(w.letters().begin(), w.letters().end()));
  if (start.empty()) return true;
  const std::size_t cap = start.size() + maxRel;

  std::priority_queue<std::vector<int>, std::vector<std::vector<int>>, Shortlex> open;
  std::set<std::vector<int>> seen{start};
  open.push(start);
  std::size_t expanded = 0;
  while (!open.empty() && expanded < budget) {
    const auto cur = open.top();
    open.pop();
    ++expanded;
    for (const auto& p : pieces) {
      if (p.lhs.size() > cur.size() || cur.size() - p.lhs.size() + p.rhs.size() > cap) continue;
      for (std::size_t i = 0; i + p.lhs.size() <= cur.size(); ++i) {
        if (!std::equal(p.lhs.begin(), p.lhs.end(), cur.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        std::vector<int> next;
        next.reserve(cur.size() + p.rhs.size());
        for (std::size_t k = 0; k < i; ++k) freegroup::pushReduced(next, cur[k]);
        for (int x : p.rhs) freegroup::pushReduced(next, x);
        for (std::size_t k = i + p.lhs.size(); k < cur.size(); ++k) freegroup::pushReduced(next, cur[k]);
        if (next.empty()) return true;
        if (seen.insert(next).second) open.push(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace detail

inline McgDecision decideMcgImage(const BraidWord& w, std::size_t budget = kDefaultBudget) {
  if (w.ambient() != Ambient::Spherical)
    throw Error(ErrorCode::OutOfRange, "mapping class image is defined for spherical braids only");
  if (!permutationOf(w).isIdentity()) return {McgVerdict::False, 1};
  const std::int64_t order = mcgAbelianOrder(w.strands());
  std::int64_t d = 0;
  for (int l : w.letters()) d += l > 0 ? 1 : -1;
  if (((d % order) + order) % order != 0) return {McgVerdict::False, 2};

  const int n = w.strands();
  if (auto images = freegroup::artinImages(w, budget)) {
    std::vector<freegroup::Word> reduced;
    for (int i = 0; i + 1 < n; ++i) reduced.push_back(freegroup::eliminateLast((*images)[static_cast<std::size_t>(i)], n));
    return {freegroup::isInner(reduced) ? McgVerdict::True : McgVerdict::False, 3};
  }
  if (detail::rewriteToIdentity(w, budget)) return {McgVerdict::True, 4};
  return {McgVerdict::Unknown, 4};
}

inline McgVerdict mcgImageTrivial(const BraidWord& w, std::size_t budget = kDefaultBudget) {
  return decideMcgImage(w, budget).verdict;
}

}  // namespace lefschetz
