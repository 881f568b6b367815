#pragma once

// Integer symplectic linear algebra on H1 of the fiber: the intersection
// pairing, Picard-Lefschetz transvections, the H1-action of a factorization
// and first homology of the total space through Smith normal form.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw Error(ErrorCode::DimensionMismatch, "entry count does not match matrix dimensions");
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntegerMatrix fromColumns(std::size_t rows, const std::vector<HomologyVector>& columns) {
    IntegerMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool isIdentity() const { return rows_ == cols_ && *this == identity(rows_); }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend HomologyVector operator*(const IntegerMatrix& a, const HomologyVector& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
    HomologyVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
    return y;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;   // U, unimodular, rows x rows
  IntegerMatrix right;  // V, unimodular, cols x cols
  // d_1 | d_2 | ... ; length min(rows, cols); all non-negative.
  std::vector<Integer> invariantFactors;
};

/// Unimodular U, V with U * m * V diagonal and the diagonal a divisibility
/// chain. Pivots are chosen by minimal magnitude to keep entries small.
inline SmithForm smithNormalForm(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);

  auto swapRows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u(a, j), u(b, j));
  };
  auto swapCols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, a), v(i, b));
  };
  // row[dst] += q * row[src]
  auto addRow = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) d(dst, j) += q * d(src, j);
    for (std::size_t j = 0; j < rows; ++j) u(dst, j) += q * u(src, j);
  };
  auto addCol = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) d(i, dst) += q * d(i, src);
    for (std::size_t i = 0; i < cols; ++i) v(i, dst) += q * v(i, src);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (pi == rows || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;
      swapRows(t, pi);
      swapCols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        addRow(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        addCol(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold a witness row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            addRow(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }

  std::vector<Integer> factors(steps);
  for (std::size_t t = 0; t < steps; ++t) factors[t] = d(t, t);
  return SmithForm{std::move(d), std::move(u), std::move(v), std::move(factors)};
}

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // each >= 2, divisibility chain

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  std::string toString() const {
    std::string out;
    auto add = [&](const std::string& s) { out += out.empty() ? s : " + " + s; };
    if (rank == 1) add("Z");
    else if (rank > 1) add("Z^" + std::to_string(rank));
    for (const auto& t : torsion) add("Z_" + t.str());
    return out.empty() ? "0" : out;
  }
};

/// Z^rows modulo the column span of `m`.
inline AbelianGroup cokernel(const IntegerMatrix& m) {
  AbelianGroup group;
  group.rank = m.rows();
  if (m.cols() == 0) return group;
  const auto snf = smithNormalForm(m);
  for (const auto& f : snf.invariantFactors) {
    if (f == 0) continue;
    --group.rank;
    if (f > 1) group.torsion.push_back(f);
  }
  return group;
}

inline Integer symplecticPairing(const HomologyVector& u, const HomologyVector& v, Genus g) {
  const auto n = static_cast<std::size_t>(g.rank());
  if (u.size() != n || v.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "pairing expects vectors of length 2g = " + std::to_string(n));
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < n; i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

/// x + n <x, c> c, the H1-action of tau_c^n.
inline HomologyVector transvect(const CurveClass& c, const HomologyVector& x, const Integer& n) {
  if (x.size() != c.vector.size())
    throw Error(ErrorCode::DimensionMismatch, "transvection of a vector from a different genus");
  const Integer k = n * symplecticPairing(x, c.vector, c.genus);
  HomologyVector y = x;
  if (k != 0)
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * c.vector[i];
  return y;
}

inline IntegerMatrix transvectionMatrix(const CurveClass& c, const Integer& n) {
  const auto dim = static_cast<std::size_t>(c.genus.rank());
  std::vector<HomologyVector> columns;
  for (std::size_t j = 0; j < dim; ++j) {
    HomologyVector e(dim);
    e[j] = 1;
    columns.push_back(transvect(c, e, n));
  }
  return IntegerMatrix::fromColumns(dim, columns);
}

/// Homology class of the curve a letter twists along, conjugators applied.
inline HomologyVector expandedVector(const FibrationSpec& spec, const TwistLetter& letter) {
  HomologyVector x = spec.curve(letter.curve).vector;
  for (auto it = letter.conjugator.rbegin(); it != letter.conjugator.rend(); ++it)
    x = transvect(spec.curve(it->curve), x, it->power);
  return x;
}

/// The expanded letter as a curve: same kind as its base curve.
inline CurveClass expandedCurve(const FibrationSpec& spec, const TwistLetter& letter) {
  CurveClass c = spec.curve(letter.curve);
  c.vector = expandedVector(spec, letter);
  return c;
}

/// Product of the letters' transvections; the first letter acts first.
inline IntegerMatrix factorizationH1Action(const FibrationSpec& spec) {
  IntegerMatrix action = IntegerMatrix::identity(static_cast<std::size_t>(spec.genus.rank()));
  for (const auto& letter : spec.letters) {
    const CurveClass c = expandedCurve(spec, letter);
    if (c.kind.isSeparating()) continue;
    action = transvectionMatrix(c, 1) * action;
  }
  return action;
}

/// H1 of the total space: Z^{2g} modulo the vanishing-cycle classes. Needs a
/// section, without which the quotient description does not apply.
inline AbelianGroup firstHomology(const FibrationSpec& spec) {
  if (!spec.hasSection)
    throw Error(ErrorCode::NoSection, "first homology needs a fibration with a section");
  std::vector<HomologyVector> columns;
  columns.reserve(spec.letters.size());
  for (const auto& letter : spec.letters) columns.push_back(expandedVector(spec, letter));
  return cokernel(IntegerMatrix::fromColumns(static_cast<std::size_t>(spec.genus.rank()), columns));
}

}  // namespace lefschetz
