#pragma once

// Words in the planar braid group B(C,n) and the spherical braid group
// B(S^2,n). A letter is a signed generator index: +i is sigma_i, -i its
// inverse. Products follow the left-to-right convention (the first letter
// acts first).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

enum class Ambient { Planar, Spherical };

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, Ambient ambient, std::vector<int> letters = {})
      : strands_(strands), ambient_(ambient), letters_(std::move(letters)) {
    if (strands_ < 2) throw Error(ErrorCode::OutOfRange, "a braid needs at least 2 strands");
    for (int l : letters_) checkLetter(l);
  }

  static BraidWord generator(int strands, Ambient ambient, int letter) { return BraidWord(strands, ambient, {letter}); }

  int strands() const { return strands_; }
  Ambient ambient() const { return ambient_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends one letter, cancelling it against the last letter if inverse.
  BraidWord& append(int letter) {
    checkLetter(letter);
    if (!letters_.empty() && letters_.back() == -letter) letters_.pop_back();
    else letters_.push_back(letter);
    return *this;
  }

  /// Concatenation with cancellation at the seam; amortized O(1) per letter.
  BraidWord& append(const BraidWord& other) {
    checkCompatible(other);
    for (int l : other.letters_) append(l);
    return *this;
  }

  /// Appends without any cancellation.
  BraidWord& appendRaw(const BraidWord& other) {
    checkCompatible(other);
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  BraidWord inverse() const {
    BraidWord inv(strands_, ambient_);
    inv.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.letters_.push_back(-*it);
    return inv;
  }

  /// w^k, with k < 0 meaning powers of the inverse. Seams are reduced.
  BraidWord power(std::int64_t k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out(strands_, ambient_);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.append(base);
    return out;
  }

  BraidWord conjugatedBy(const BraidWord& x) const {
    BraidWord out = x;
    out.append(*this);
    out.append(x.inverse());
    return out;
  }

  BraidWord freelyReduced() const {
    BraidWord out(strands_, ambient_);
    out.letters_.reserve(letters_.size());
    for (int l : letters_) out.append(l);
    return out;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return std::move(a.append(b)); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string toString() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BraidWord& w) { return os << '[' << w.toString() << ']'; }

 private:
  void checkLetter(int l) const {
    if (l == 0 || std::abs(l) >= strands_)
      throw Error(ErrorCode::OutOfRange,
                  "generator index " + std::to_string(l) + " outside [1, " + std::to_string(strands_ - 1) + "]");
  }
  void checkCompatible(const BraidWord& other) const {
    if (other.strands_ != strands_ || other.ambient_ != ambient_)
      throw Error(ErrorCode::DimensionMismatch, "braid words live in different groups");
  }

  int strands_ = 2;
  Ambient ambient_ = Ambient::Spherical;
  std::vector<int> letters_;
};

/// sigma_1 sigma_2 ... sigma_{n-1} sigma_{n-1} ... sigma_1, trivial in B(S^2,n).
inline BraidWord rimWord(int strands, Ambient ambient = Ambient::Spherical) {
  std::vector<int> letters;
  for (int i = 1; i < strands; ++i) letters.push_back(i);
  for (int i = strands - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(strands, ambient, std::move(letters));
}

/// (sigma_1 ... sigma_{n-1})^n, generating the kernel of B(S^2,n) -> M(S^2,n).
inline BraidWord fullTwist(int strands, Ambient ambient = Ambient::Spherical) {
  std::vector<int> letters;
  for (int k = 0; k < strands; ++k)
    for (int i = 1; i < strands; ++i) letters.push_back(i);
  return BraidWord(strands, ambient, std::move(letters));
}

// ---------------------------------------------------------------------------
// Abelian and symmetric quotients

/// Permutation of {1..n} stored 0-based: image[p] is where strand p ends up.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n) {
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
  }

  bool isIdentity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// This permutation followed by `next`.
  Permutation then(const Permutation& next) const {
    Permutation out;
    out.image.reserve(image.size());
    for (int x : image) out.image.push_back(next.image[static_cast<std::size_t>(x)]);
    return out;
  }

  /// Disjoint cycle notation, 1-based, fixed points omitted; "()" for identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t s = 0; s < image.size(); ++s) {
      if (seen[s] || image[s] == static_cast<int>(s)) continue;
      out += '(';
      for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x])) {
        seen[x] = true;
        out += (x == s ? "" : " ") + std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline Permutation permutationOf(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int l : w.letters()) {
    const int a = std::abs(l) - 1, b = std::abs(l);
    for (int& x : p.image) {
      if (x == a) x = b;
      else if (x == b) x = a;
    }
  }
  return p;
}

/// Signed letter count; in the spherical group it is a residue modulo 2(n-1).
struct Degree {
  std::int64_t value = 0;
  std::int64_t modulus = 0;  // 0 for the planar group

  friend bool operator==(const Degree&, const Degree&) = default;
};

inline std::int64_t sphericalDegreeModulus(int strands) { return 2 * (strands - 1); }

inline Degree degree(const BraidWord& w) {
  std::int64_t d = 0;
  for (int l : w.letters()) d += l > 0 ? 1 : -1;
  if (w.ambient() == Ambient::Planar) return {d, 0};
  const std::int64_t m = sphericalDegreeModulus(w.strands());
  return {((d % m) + m) % m, m};
}

// ---------------------------------------------------------------------------
// Single rewrite moves. Each returns false (and leaves the word untouched)
// when the move does not apply at `pos`.

namespace rewrite {

/// sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j for |i-j| = 1, same signs.
inline bool braidRelation(std::vector<int>& w, std::size_t pos) {
  if (pos + 3 > w.size()) return false;
  const int a = w[pos], b = w[pos + 1];
  if (w[pos + 2] != a || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) return false;
  w[pos] = b;
  w[pos + 1] = a;
  w[pos + 2] = b;
  return true;
}

/// sigma_i sigma_j -> sigma_j sigma_i for |i-j| > 1.
inline bool commute(std::vector<int>& w, std::size_t pos) {
  if (pos + 2 > w.size() || std::abs(std::abs(w[pos]) - std::abs(w[pos + 1])) <= 1) return false;
  std::swap(w[pos], w[pos + 1]);
  return true;
}

/// Deletes sigma sigma^{-1} at pos.
inline bool cancelPair(std::vector<int>& w, std::size_t pos) {
  if (pos + 2 > w.size() || w[pos] != -w[pos + 1]) return false;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + 2));
  return true;
}

inline bool deleteSubword(std::vector<int>& w, std::size_t pos, const std::vector<int>& sub) {
  if (sub.empty() || pos + sub.size() > w.size()) return false;
  if (!std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return false;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + sub.size()));
  return true;
}

/// Deletes an occurrence of the rim word or its inverse.
inline bool deleteRim(std::vector<int>& w, std::size_t pos, int strands) {
  const auto rim = rimWord(strands);
  std::vector<int> fwd(rim.letters().begin(), rim.letters().end());
  std::vector<int> inv(fwd.rbegin(), fwd.rend());
  for (int& x : inv) x = -x;
  return deleteSubword(w, pos, fwd) || deleteSubword(w, pos, inv);
}

}  // namespace rewrite

}  // namespace lefschetz
