#include <random>

#include <gtest/gtest.h>

#include "lefschetz/homology.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

IntegerMatrix randomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

bool unimodular(const IntegerMatrix& m) {
  // |det| = 1 via the minors oracle: the top invariant product.
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  const auto f = oracle::invariantFactorsByMinors(rows);
  if (f.size() != m.rows()) return false;
  for (const auto& x : f)
    if (x != 1) return false;
  return true;
}

CurveClass curve(std::vector<int> v) {
  HomologyVector h(v.begin(), v.end());
  return {"x", Genus{static_cast<int>(v.size() / 2)}, CurveKind::nonSeparating(), h};
}

}  // namespace

TEST(SmithNormalForm, WorkedExample) {
  IntegerMatrix m(2, 2, {2, 4, 6, 8});
  const auto snf = smithNormalForm(m);
  EXPECT_EQ(snf.invariantFactors, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
}

TEST(SmithNormalForm, ZeroAndEmpty) {
  const auto z = smithNormalForm(IntegerMatrix(3, 2));
  EXPECT_EQ(z.invariantFactors, (std::vector<Integer>{0, 0}));
  EXPECT_EQ(cokernel(IntegerMatrix(3, 0)), (AbelianGroup{3, {}}));
  EXPECT_EQ(cokernel(IntegerMatrix(2, 2)), (AbelianGroup{2, {}}));
}

TEST(SmithNormalForm, MatchesMinorsOracleOnRandomMatrices) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  int cases = 0;
  while (cases < 1200) {
    const std::size_t r = std::min<std::size_t>(dim(rng), 4), c = dim(rng);
    const auto m = randomMatrix(rng, r, c, 5);
    const auto snf = smithNormalForm(m);
    ASSERT_EQ(snf.left * m * snf.right, snf.diagonal) << m;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(snf.diagonal(i, j), 0);
    std::vector<std::vector<Integer>> rows(r, std::vector<Integer>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rows[i][j] = m(i, j);
    auto expected = oracle::invariantFactorsByMinors(rows);
    expected.resize(std::min(r, c), 0);
    ASSERT_EQ(snf.invariantFactors, expected) << m;
    for (std::size_t k = 1; k < snf.invariantFactors.size(); ++k)
      if (snf.invariantFactors[k - 1] != 0) ASSERT_EQ(snf.invariantFactors[k] % snf.invariantFactors[k - 1], 0);
    ++cases;
  }
}

TEST(SmithNormalForm, TransformsAreUnimodular) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto m = randomMatrix(rng, 3, 4, 5);
    const auto snf = smithNormalForm(m);
    ASSERT_TRUE(unimodular(snf.left));
    ASSERT_TRUE(unimodular(snf.right));
  }
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  IntegerMatrix m(2, 2, {Integer("123456789012345678901234567890"), 3, 6, 9});
  const auto snf = smithNormalForm(m);
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel(IntegerMatrix(1, 1, {3})).toString(), "Z_3");
  EXPECT_EQ(cokernel(IntegerMatrix(2, 1, {0, 5})).toString(), "Z + Z_5");
  EXPECT_EQ(cokernel(IntegerMatrix(2, 2, {1, 0, 0, 1})).toString(), "0");
  EXPECT_EQ(cokernel(IntegerMatrix(4, 0)).toString(), "Z^4");
}

TEST(Pairing, BasisAndAntisymmetry) {
  const Genus g{2};
  HomologyVector a1{1, 0, 0, 0}, b1{0, 1, 0, 0}, a2{0, 0, 1, 0}, b2{0, 0, 0, 1};
  EXPECT_EQ(symplecticPairing(a1, b1, g), 1);
  EXPECT_EQ(symplecticPairing(b1, a1, g), -1);
  EXPECT_EQ(symplecticPairing(a1, a2, g), 0);
  EXPECT_EQ(symplecticPairing(a2, b2, g), 1);
  EXPECT_THROW(symplecticPairing(a1, HomologyVector{1, 0}, g), Error);
}

TEST(Transvection, PreservesPairingRandomized) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-4, 4), gd(1, 3), nd(-3, 3);
  for (int t = 0; t < 300; ++t) {
    const Genus g{gd(rng)};
    auto vec = [&] {
      HomologyVector v(static_cast<std::size_t>(g.rank()));
      for (auto& x : v) x = d(rng);
      return v;
    };
    CurveClass c{"c", g, CurveKind::nonSeparating(), vec()};
    const auto x = vec(), y = vec();
    const int n = nd(rng);
    ASSERT_EQ(symplecticPairing(transvect(c, x, n), transvect(c, y, n), g), symplecticPairing(x, y, g));
    // Powers compose additively.
    ASSERT_EQ(transvect(c, transvect(c, x, n), 1), transvect(c, x, n + 1));
    ASSERT_EQ(transvectionMatrix(c, n) * x, transvect(c, x, n));
  }
}

TEST(Transvection, InverseUndoes) {
  const auto c = curve({1, 1, 0, 1});
  EXPECT_TRUE((transvectionMatrix(c, 2) * transvectionMatrix(c, -2)).isIdentity());
}

TEST(FirstHomology, NeedsSection) {
  FibrationSpec s;
  s.genus = Genus{1};
  s.hasSection = false;
  try {
    firstHomology(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSection);
  }
}

TEST(FirstHomology, ConjugatedLettersUseTwistedClass) {
  FibrationSpec s;
  s.genus = Genus{1};
  s.hasSection = true;
  s.curves = {curve({1, 0}), {"b", Genus{1}, CurveKind::nonSeparating(), {0, 1}}};
  s.curves[0].id = "a";
  // tau_b^3(a) = a + 3b, so the quotient by a and a + 3b is Z_3.
  s.letters = {{"a", {}}, {"a", {{"b", 3}}}};
  EXPECT_EQ(firstHomology(s).toString(), "Z_3");
}
