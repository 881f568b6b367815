#pragma once

// End-to-end analysis of a fibration spec: every invariant the engine knows
// how to compute, with undecided or unavailable pieces surfaced as warnings.

#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/constructions.hpp"
#include "lefschetz/core_model.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/lift.hpp"
#include "lefschetz/sixfold.hpp"

namespace lefschetz {

struct AnalysisOptions {
  LiftClassOptions lift;
  Provenance provenance;
  std::optional<std::int64_t> m;  // [Y] . beta; left symbolic when absent
  std::string totalSpaceName = "M";
};

struct AnalysisReport {
  Genus genus;
  std::size_t letterCount = 0;
  std::size_t reducibleFibers = 0;
  std::int64_t chi = 0;
  std::optional<std::int64_t> sigma;
  std::optional<AbelianGroup> h1;
  std::optional<InvariantReport> invariants;
  ComplexStructure complexStructure = ComplexStructure::Unknown;
  std::optional<LiftClass> liftClass;  // absent when no lift could be formed
  std::optional<AmbientDescriptor> ambient;
  H4Class yClass;  // with a = m when given, else 0 and m reported as symbolic
  std::optional<std::int64_t> m;
  BlowUpLedger ledger;
  YDiffeoDescriptor yDiffeo;
  std::vector<std::string> warnings;
};

namespace detail {

struct LiftOutcome {
  std::optional<LiftClass> cls;
  std::optional<std::string> warning;
};

inline LiftOutcome computeLift(const FibrationSpec& spec, const LiftData* lifts, const LiftClassOptions& options) {
  if (!lifts) return {std::nullopt, "no lift data; global braid monodromy not computed"};
  try {
    return {liftClass(globalBraidMonodromy(spec, *lifts), options), std::nullopt};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotMcgTrivial || e.code() == ErrorCode::MissingLiftData)
      return {std::nullopt, std::string("global braid monodromy unavailable: ") + e.what()};
    throw;
  }
}

}  // namespace detail

inline AnalysisReport analyze(const FibrationSpec& spec, const LiftData* lifts = nullptr,
                              const AnalysisOptions& options = {}) {
  validate(spec);
  AnalysisReport r;
  r.genus = spec.genus;
  r.letterCount = spec.letters.size();
  r.reducibleFibers = countReducible(spec);
  r.chi = eulerCharacteristic(spec.genus, static_cast<std::int64_t>(spec.letters.size()));

  // The lift-class search is the expensive part; run it beside the rest.
  auto liftTask = std::async(std::launch::async, [&] { return detail::computeLift(spec, lifts, options.lift); });

  if (spec.blockSignatures) r.sigma = signatureByAdditivity(spec.blockSignatures);
  else if (spec.letters.empty()) r.sigma = 0;
  else r.warnings.push_back("no block signatures declared; signature unknown");

  if (spec.hasSection) r.h1 = firstHomology(spec);
  else r.warnings.push_back("no section; first homology not computed");

  if (r.sigma && r.h1) {
    r.invariants = bettiTable(r.chi, *r.sigma, static_cast<std::int64_t>(r.h1->rank));
    r.invariants->h1 = *r.h1;
    r.complexStructure = complexObstruction(*r.h1, r.invariants->b2plus, options.provenance);
    r.invariants->complexStructure = r.complexStructure;
  }

  auto lift = liftTask.get();
  r.liftClass = lift.cls;
  if (lift.warning) r.warnings.push_back(*lift.warning);
  if (r.liftClass == LiftClass::Undecided) r.warnings.push_back("lift class undecided within budget");
  if (r.liftClass && *r.liftClass != LiftClass::Undecided) r.ambient = bundleType(*r.liftClass, spec.genus);

  r.m = options.m;
  r.yClass = classOfY(spec.genus, options.m.value_or(0));
  r.ledger = blowUpLedger(spec);
  r.yDiffeo = yDiffeoDescriptor(spec, options.totalSpaceName);
  return r;
}

}  // namespace lefschetz
