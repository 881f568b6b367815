#pragma once

// Brute-force oracles used by the tests; deliberately independent of the
// library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using Word = std::vector<int>;

inline Word freeReduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

inline Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

/// Relators of M(S^2, n): braid and commutation relations, the rim word and
/// (s1 ... s_{n-1})^n.
inline std::vector<Word> mcgRelators(int n) {
  std::vector<Word> rel;
  for (int i = 1; i + 1 < n; ++i) rel.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rel.push_back({i, j, -i, -j});
  Word rim, twist;
  for (int i = 1; i < n; ++i) rim.push_back(i);
  for (int i = n - 1; i >= 1; --i) rim.push_back(i);
  for (int k = 0; k < n; ++k)
    for (int i = 1; i < n; ++i) twist.push_back(i);
  rel.push_back(rim);
  rel.push_back(twist);
  return rel;
}

/// Relation closure of M(S^2, n) on cyclic words. A word is trivial exactly
/// when any cyclic conjugate is, so words are kept cyclically reduced in
/// their least rotation. One step replaces a cyclic subword u by v^{-1}
/// where uv is a cyclic rotation of a relator or of its inverse; u = empty
/// (insertion) and v = empty (deletion) are allowed, so steps are symmetric.
class RelationClosure {
 public:
  RelationClosure(int n, std::size_t maxLength) : maxLength_(maxLength) {
    std::set<std::pair<Word, Word>> seen;
    for (const auto& r0 : mcgRelators(n)) {
      for (const auto& r : {r0, invert(r0)}) {
        for (std::size_t rot = 0; rot < r.size(); ++rot) {
          Word c(r.begin() + static_cast<std::ptrdiff_t>(rot), r.end());
          c.insert(c.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(rot));
          for (std::size_t k = 0; k <= c.size(); ++k) {
            Word u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
            Word v(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
            if (seen.insert({u, invert(v)}).second) moves_.push_back({u, invert(v)});
          }
        }
      }
    }
  }

  static Word canonical(const Word& w) {
    Word x = freeReduce(w);
    std::size_t lo = 0, hi = x.size();
    while (hi - lo >= 2 && x[lo] == -x[hi - 1]) ++lo, --hi;
    x = Word(x.begin() + static_cast<std::ptrdiff_t>(lo), x.begin() + static_cast<std::ptrdiff_t>(hi));
    Word best = x;
    for (std::size_t r = 1; r < x.size(); ++r) {
      Word y(x.begin() + static_cast<std::ptrdiff_t>(r), x.end());
      y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
      best = std::min(best, y);
    }
    return best;
  }

  template <class F>
  void neighbours(const Word& w, F&& visit) const {
    const std::size_t len = w.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(len, 1); ++r) {
      Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      for (const auto& [from, to] : moves_) {
        if (from.size() > rot.size() || !std::equal(from.begin(), from.end(), rot.begin())) continue;
        Word x = to;
        x.insert(x.end(), rot.begin() + static_cast<std::ptrdiff_t>(from.size()), rot.end());
        x = canonical(x);
        if (x.size() <= maxLength_) visit(std::move(x));
      }
    }
  }

  /// Words within `radius` steps of `start`.
  std::set<Word> ball(const Word& start, int radius) const {
    std::set<Word> seen{canonical(start)};
    std::vector<Word> frontier{canonical(start)};
    for (int d = 0; d < radius; ++d) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        neighbours(w, [&](Word x) {
          if (seen.insert(x).second) next.push_back(std::move(x));
        });
      frontier = std::move(next);
    }
    return seen;
  }

 private:
  std::size_t maxLength_;
  std::vector<std::pair<Word, Word>> moves_;
};

/// Breadth-first search to depth `depth` from w toward the empty word, run
/// from both ends: the ball of radius depth/2 around the empty word is built
/// once and met by the ball around w.
class BfsTriviality {
 public:
  BfsTriviality(int n, int depth = 8, std::size_t maxLength = 10)
      : n_(n), closure_(n, maxLength), depth_(depth), identityBall_(closure_.ball({}, depth / 2)) {}

  bool operator()(const Word& w) const {
    if (!passesInvariants(w)) return false;
    const Word start = RelationClosure::canonical(w);
    if (identityBall_.count(start)) return true;
    std::set<Word> seen{start};
    std::vector<Word> frontier{start};
    for (int d = 0; d < depth_ - depth_ / 2; ++d) {
      std::vector<Word> next;
      bool hit = false;
      for (const auto& x : frontier) {
        closure_.neighbours(x, [&](Word y) {
          if (hit || !seen.insert(y).second) return;
          if (identityBall_.count(y)) hit = true;
          next.push_back(std::move(y));
        });
        if (hit) return true;
      }
      frontier = std::move(next);
    }
    return false;
  }

  std::size_t identityBallSize() const { return identityBall_.size(); }

  /// Every relator has trivial permutation and degree divisible by
  /// (n-1) gcd(2, n), so words failing either test are never reached.
  bool passesInvariants(const Word& w) const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    long degree = 0;
    for (int x : w) {
      std::swap(perm[static_cast<std::size_t>(std::abs(x) - 1)], perm[static_cast<std::size_t>(std::abs(x))]);
      degree += x > 0 ? 1 : -1;
    }
    for (int i = 0; i < n_; ++i)
      if (perm[static_cast<std::size_t>(i)] != i) return false;
    const long modulus = static_cast<long>(n_ - 1) * std::gcd(2, n_);
    return modulus == 0 || degree % modulus == 0;
  }

 private:
  int n_;
  RelationClosure closure_;
  int depth_;
  std::set<Word> identityBall_;
};

/// Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.
inline std::vector<cpp_int> invariantFactorsByMinors(const std::vector<std::vector<cpp_int>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  auto det = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
    // Laplace-free exact determinant via fraction-free elimination (Bareiss).
    const std::size_t k = r.size();
    std::vector<std::vector<cpp_int>> a(k, std::vector<cpp_int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = m[r[i]][c[j]];
    cpp_int prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p) {
      if (a[p][p] == 0) {
        std::size_t s = p + 1;
        while (s < k && a[s][p] == 0) ++s;
        if (s == k) return cpp_int(0);
        std::swap(a[p], a[s]);
        sign = -sign;
      }
      for (std::size_t i = p + 1; i < k; ++i) {
        for (std::size_t j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        a[i][p] = 0;
      }
      prev = a[p][p];
    }
    return cpp_int(sign * a[k - 1][k - 1]);
  };
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  };
  std::vector<cpp_int> factors;
  cpp_int prevD = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    cpp_int g = 0;
    for (const auto& r : subsets(rows, k))
      for (const auto& c : subsets(cols, k)) g = boost::multiprecision::gcd(g, abs(det(r, c)));
    if (g == 0) break;
    factors.push_back(g / prevD);
    prevD = g;
  }
  return factors;
}

}  // namespace oracle
