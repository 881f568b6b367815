#include <random>

#include <gtest/gtest.h>

#include "lefschetz.hpp"
#include "oracles.hpp"

using namespace lefschetz;
using oracle::cpp_int;

namespace {

// Invariant factors of span{expanded vanishing classes} computed by hand:
// a letter conjugated by t_c^k contributes v + k<v,c>c, and the span is the
// same whichever sign convention the pairing uses.
std::vector<cpp_int> h1FactorsByHand(const FibrationSpec& s) {
  const auto vec = [&](const std::string& id) { return s.curve(id).vector; };
  const auto pair = [](const HomologyVector& x, const HomologyVector& y) {
    cpp_int p = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) p += x[i] * y[i + 1] - x[i + 1] * y[i];
    return p;
  };
  std::vector<std::vector<cpp_int>> rows;
  for (const auto& l : s.letters) {
    HomologyVector v = vec(l.curve);
    for (auto it = l.conjugator.rbegin(); it != l.conjugator.rend(); ++it) {
      const auto c = vec(it->curve);
      const cpp_int k = it->power * pair(v, c);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * c[i];
    }
    rows.emplace_back(v.begin(), v.end());
  }
  return oracle::invariantFactorsByMinors(rows);
}

std::string groupFromFactors(std::size_t dim, const std::vector<cpp_int>& f) {
  std::string out;
  std::size_t rank = dim - f.size();
  for (const auto& d : f)
    if (d > 1) out += (out.empty() ? "" : " + ") + ("Z_" + d.str());
  const std::string free = rank == 0 ? "" : rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  if (free.empty()) return out.empty() ? "0" : out;
  return out.empty() ? free : free + " + " + out;
}

}  // namespace

TEST(Invariants, BettiTableAndErrors) {
  const auto r = bettiTable(28, -16, 1);
  EXPECT_EQ(r.b2plus, 6);
  EXPECT_EQ(r.b2minus, 22);
  EXPECT_EQ(bettiTable(3, 1, 0).b2plus, 1);  // CP2
  EXPECT_EQ(bettiTable(24, -16, 0).b2minus, 19);  // K3
  EXPECT_THROW(bettiTable(3, 0, 0), Error);
  EXPECT_THROW(bettiTable(0, 0, 0), Error);
  EXPECT_THROW(bettiTable(4, 0, -1), Error);
}

TEST(Invariants, BlowUpCompositionRandomized) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 250; ++t) {
    const std::int64_t b1 = static_cast<std::int64_t>(rng() % 4);
    const std::int64_t bp = static_cast<std::int64_t>(rng() % 9), bm = static_cast<std::int64_t>(rng() % 9);
    const std::int64_t chi = 2 - 2 * b1 + bp + bm, sigma = bp - bm;
    const auto r = bettiTable(chi, sigma, b1);
    ASSERT_EQ(r.b2plus, bp);
    ASSERT_EQ(r.b2minus, bm);
    const std::int64_t p = static_cast<std::int64_t>(rng() % 6), q = static_cast<std::int64_t>(rng() % 6);
    const auto twice = blowUpAdjust(blowUpAdjust(r, p), q);
    ASSERT_EQ(twice, blowUpAdjust(r, p + q));
    // Blowing up agrees with recomputing from the new chi and sigma.
    const auto direct = bettiTable(chi + p + q, sigma - p - q, b1);
    ASSERT_EQ(twice.b2plus, direct.b2plus);
    ASSERT_EQ(twice.b2minus, direct.b2minus);
  }
}

TEST(Invariants, ComplexObstructionNeedsACertificate) {
  const AbelianGroup zz3{1, {3}};
  EXPECT_EQ(complexObstruction(zz3, 6, Provenance::mn(3)), ComplexStructure::Obstructed);
  EXPECT_EQ(complexObstruction(zz3, 6, Provenance::none()), ComplexStructure::Unknown);
  EXPECT_EQ(complexObstruction(zz3, 6, Provenance::mn(4)), ComplexStructure::Unknown);
  EXPECT_EQ(complexObstruction(zz3, 0, Provenance::mn(3)), ComplexStructure::Unknown);
  EXPECT_EQ(complexObstruction(AbelianGroup{1, {}}, 6, Provenance::mn(1)), ComplexStructure::Obstructed);
  EXPECT_EQ(complexObstruction(AbelianGroup{2, {}}, 6, Provenance::mn(0)), ComplexStructure::Unknown);
}

TEST(Invariants, FamilyFirstHomologyMatchesHandComputation) {
  const auto table = standardCurveTable();
  for (std::int64_t n = 0; n <= 12; ++n) {
    const auto s = familyMn(n, table);
    const auto h1 = firstHomology(s);
    EXPECT_EQ(h1.toString(), groupFromFactors(4, h1FactorsByHand(s))) << n;
    if (n >= 2) EXPECT_EQ(h1.toString(), "Z + Z_" + std::to_string(n));
  }
  EXPECT_EQ(firstHomology(familyMn(1, table)).toString(), "Z");
}

TEST(Sixfold, ClassOfYAndIntersections) {
  EXPECT_EQ(classOfY(Genus{2}, 3), (H4Class{3, 6}));
  const H4Class a{1, 0}, b{0, 1};
  EXPECT_EQ(intersect(a, {1, 0}), 0);
  EXPECT_EQ(intersect(a, {0, 1}), 1);
  EXPECT_EQ(intersect(b, {1, 0}), 1);
  EXPECT_EQ(intersect(b, {0, 1}), 0);
  // [Y].beta = m and [Y].alpha = 2g + 2 for every genus.
  for (int g = 1; g <= 6; ++g)
    for (std::int64_t m = -3; m <= 3; ++m) {
      EXPECT_EQ(intersect(classOfY(Genus{g}, m), {0, 1}), m);
      EXPECT_EQ(intersect(classOfY(Genus{g}, m), {1, 0}), 2 * g + 2);
    }
}

TEST(Sixfold, BundleType) {
  EXPECT_EQ(bundleType(LiftClass::Trivial, Genus{2}).toString(), "S2 x CP2");
  EXPECT_TRUE(bundleType(LiftClass::FullTwist, Genus{4}).twistedIsTrivialBundle);
  EXPECT_FALSE(bundleType(LiftClass::FullTwist, Genus{2}).twistedIsTrivialBundle);
  EXPECT_THROW(bundleType(LiftClass::Undecided, Genus{2}), Error);
}

TEST(Sixfold, LedgerForTheFamily) {
  const auto s = familyMn(3, standardCurveTable());
  const auto l = blowUpLedger(s);
  EXPECT_EQ(l.fiberwiseLineBlowups, 3);
  EXPECT_EQ(l.pointBlowups, 16);
  EXPECT_EQ(l.curveBlowups, std::vector<std::int64_t>(8, 1));
  // 6 + 2*3 from the fiberwise lines, then 2*2 + 1*2 per reducible fiber.
  EXPECT_EQ(l.eulerCharacteristicX, 6 + 6 + 8 * 6);
  EXPECT_EQ(yDiffeoDescriptor(s).text, "M # 8·CP2bar");
  EXPECT_EQ(yDiffeoDescriptor(s, "M(3)").reducibleFibers, 8u);
}

TEST(DelPezzo, ClassificationTable) {
  // chi and sigma of degree k surfaces in CP3, written out by hand.
  const std::int64_t chi[] = {3, 4, 9, 24, 55}, sigma[] = {1, 0, -5, -16, -35};
  for (std::int64_t k = 1; k <= 5; ++k) {
    const auto [c, s] = hypersurfaceInvariants(k);
    EXPECT_EQ(c, chi[k - 1]) << k;
    EXPECT_EQ(s, sigma[k - 1]) << k;
  }
  const auto d1 = classify(1), d2 = classify(2), d3 = classify(3);
  EXPECT_EQ(d1.diffeoType, DelPezzoType::CP2);
  EXPECT_EQ(d2.diffeoType, DelPezzoType::S2xS2);
  EXPECT_EQ(d3.diffeoType, DelPezzoType::CP2_6CP2bar);
  EXPECT_TRUE(d2.spin);
  EXPECT_FALSE(d1.spin || d3.spin);
  // b2- agrees with the Betti table of a simply connected surface.
  for (std::int64_t k = 1; k <= 3; ++k) {
    const auto [c, s] = hypersurfaceInvariants(k);
    EXPECT_EQ(b2minus(k), bettiTable(c, s, 0).b2minus) << k;
  }
  EXPECT_EQ(classify(7).diffeoType, DelPezzoType::Unsupported);
  EXPECT_FALSE(classify(7).reason.empty());
  EXPECT_EQ(classify(0).diffeoType, DelPezzoType::Unsupported);
  EXPECT_THROW(b2minus(4), Error);
  EXPECT_THROW(hypersurfaceInvariants(0), Error);
}

TEST(Analysis, DemoFamily) {
  const auto table = standardCurveTable();
  AnalysisOptions opt;
  opt.provenance = Provenance::mn(3);
  opt.m = 2;
  const auto r = analyze(familyMn(3, table), &table.lifts, opt);
  EXPECT_EQ(r.chi, 28);
  EXPECT_EQ(r.sigma, -16);
  ASSERT_TRUE(r.invariants);
  EXPECT_EQ(r.invariants->b2plus, 6);
  EXPECT_EQ(r.complexStructure, ComplexStructure::Obstructed);
  EXPECT_EQ(r.liftClass, LiftClass::Trivial);
  EXPECT_EQ(r.ambient->toString(), "S2 x CP2");
  EXPECT_EQ(r.yClass, (H4Class{2, 6}));
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(exitCodeFor(r, true), kExitOk);
}

TEST(Analysis, MissingPiecesBecomeWarnings) {
  FibrationSpec s;
  s.genus = Genus{2};
  s.hasSection = false;
  const auto r = analyze(s);
  EXPECT_EQ(r.sigma, 0);
  EXPECT_FALSE(r.h1);
  EXPECT_FALSE(r.liftClass);
  EXPECT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(exitCodeFor(r, false), kExitOk);
  EXPECT_EQ(exitCodeFor(r, true), kExitUndecided);
}

TEST(Report, MachineOutputIsStable) {
  const auto table = standardCurveTable();
  const auto spec = familyMn(2, table);
  const auto digest = inputDigest(serializeSpec(spec, &table.lifts));
  EXPECT_EQ(digest.rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(digest.size(), 8u + 16u);
  EXPECT_EQ(inputDigest(""), "fnv1a64:cbf29ce484222325");
  const auto a = machineReport(analyze(spec, &table.lifts), digest);
  const auto b = machineReport(analyze(spec, &table.lifts), digest);
  EXPECT_EQ(a, b);
  const auto j = Json::parse(a);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["invariants"]["h1"]["text"], "Z + Z_2");
  EXPECT_EQ(j["y_class"]["a"], "m");
  EXPECT_NE(textReport(analyze(spec, &table.lifts), digest).find("S2 x CP2"), std::string::npos);
}
