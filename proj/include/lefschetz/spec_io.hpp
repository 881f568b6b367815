#pragma once

// JSON spec documents:
//
//   {
//     "genus": 2,
//     "has_section": true,
//     "curves": [{"id": "c1", "kind": "nonsep", "vector": [-1, 0, 0, 1], "lift": [-5, -4]},
//                {"id": "c4", "kind": "sep", "h": 1, "vector": [0, 0, 0, 0]}],
//     "letters": [{"curve": "c1"}, {"curve": "c1", "conjugator": [{"curve": "c", "power": 3}]}],
//     "block_signatures": [-4]
//   }
//
// "lift" is the optional conjugator braid (signed generator list on 2g+2
// strands) positioning the curve's lift; it defaults to the empty word.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lefschetz/braid_word.hpp"
#include "lefschetz/core_model.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/lift.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

struct SpecDocument {
  FibrationSpec spec;
  LiftData lifts;
};

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

inline const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) malformed(std::string("missing field '") + name + "'");
  return obj.at(name);
}

inline std::int64_t asInt(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::vector<std::int64_t> asIntList(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(asInt(x, where));
  return out;
}

inline std::string asString(const Json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

/// Schema and invariant checks, including that the product of the letters'
/// transvections is the identity on H1.
inline void validateDocument(const SpecDocument& doc) {
  validate(doc.spec);
  if (!factorizationH1Action(doc.spec).isIdentity())
    throw Error(ErrorCode::InvariantViolation, "product of the letters' transvections is not the identity on H1");
}

inline SpecDocument specDocumentFromJson(const Json& j) {
  using namespace detail;
  if (!j.is_object()) malformed("document must be an object");
  SpecDocument doc;
  auto& spec = doc.spec;
  const auto genus = asInt(field(j, "genus"), "genus");
  if (genus < 0 || genus > 1000) malformed("genus out of range");
  spec.genus = Genus{static_cast<int>(genus)};
  const auto& hs = field(j, "has_section");
  if (!hs.is_boolean()) malformed("has_section must be a boolean");
  spec.hasSection = hs.get<bool>();

  const auto& curves = field(j, "curves");
  if (!curves.is_array()) malformed("curves must be a list");
  for (const auto& cj : curves) {
    CurveClass c;
    c.id = asString(field(cj, "id"), "curve id");
    c.genus = spec.genus;
    const auto kind = asString(field(cj, "kind"), "curve kind");
    if (kind == "nonsep") {
      if (cj.contains("h")) malformed("non-separating curve '" + c.id + "' must not carry h");
      c.kind = CurveKind::nonSeparating();
    } else if (kind == "sep") {
      const auto h = asInt(field(cj, "h"), "h");
      if (h <= 0 || h > 1000) throw Error(ErrorCode::InvariantViolation, "separating type h must be positive (curve '" + c.id + "')");
      c.kind = CurveKind::separating(static_cast<int>(h));
    } else {
      malformed("curve kind must be \"nonsep\" or \"sep\"");
    }
    for (auto x : asIntList(field(cj, "vector"), "vector")) c.vector.emplace_back(x);
    BraidWord lift(spec.genus.branchPoints() >= 2 ? spec.genus.branchPoints() : 2, Ambient::Spherical);
    if (cj.contains("lift")) {
      std::vector<int> letters;
      for (auto x : asIntList(cj.at("lift"), "lift")) letters.push_back(static_cast<int>(x));
      try {
        lift = BraidWord(spec.genus.branchPoints(), Ambient::Spherical, letters);
      } catch (const Error& e) {
        malformed("lift of curve '" + c.id + "': " + e.what());
      }
    }
    doc.lifts.insert_or_assign(c.id, lift);
    spec.curves.push_back(std::move(c));
  }

  const auto& letters = field(j, "letters");
  if (!letters.is_array()) malformed("letters must be a list");
  for (const auto& lj : letters) {
    TwistLetter l;
    l.curve = asString(field(lj, "curve"), "letter curve");
    if (lj.contains("conjugator")) {
      const auto& conj = lj.at("conjugator");
      if (!conj.is_array()) malformed("conjugator must be a list");
      for (const auto& ej : conj)
        l.conjugator.push_back({asString(field(ej, "curve"), "conjugator curve"), asInt(field(ej, "power"), "power")});
    }
    spec.letters.push_back(std::move(l));
  }

  if (j.contains("block_signatures")) spec.blockSignatures = asIntList(j.at("block_signatures"), "block_signatures");
  validateDocument(doc);
  return doc;
}

inline SpecDocument parseSpecDocument(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  return specDocumentFromJson(j);
}

inline FibrationSpec parseSpec(std::string_view text) { return parseSpecDocument(text).spec; }

inline Json toJson(const FibrationSpec& spec, const LiftData* lifts = nullptr) {
  Json j;
  j["genus"] = spec.genus.value;
  j["has_section"] = spec.hasSection;
  j["curves"] = Json::array();
  for (const auto& c : spec.curves) {
    Json cj;
    cj["id"] = c.id;
    cj["kind"] = c.kind.isSeparating() ? "sep" : "nonsep";
    if (c.kind.isSeparating()) cj["h"] = c.kind.h();
    cj["vector"] = Json::array();
    for (const auto& x : c.vector) cj["vector"].push_back(x.convert_to<std::int64_t>());
    if (lifts) {
      auto it = lifts->find(c.id);
      if (it != lifts->end() && !it->second.empty())
        cj["lift"] = std::vector<int>(it->second.letters().begin(), it->second.letters().end());
    }
    j["curves"].push_back(std::move(cj));
  }
  j["letters"] = Json::array();
  for (const auto& l : spec.letters) {
    Json lj;
    lj["curve"] = l.curve;
    if (!l.conjugator.empty()) {
      lj["conjugator"] = Json::array();
      for (const auto& e : l.conjugator) lj["conjugator"].push_back(Json{{"curve", e.curve}, {"power", e.power}});
    }
    j["letters"].push_back(std::move(lj));
  }
  if (spec.blockSignatures) j["block_signatures"] = *spec.blockSignatures;
  return j;
}

inline std::string serializeSpec(const FibrationSpec& spec, const LiftData* lifts = nullptr) {
  return toJson(spec, lifts).dump(2) + "\n";
}

}  // namespace lefschetz
