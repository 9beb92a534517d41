#pragma once

// JSON forms of every payload the CLI emits. Field names are stable and
// documented in README.md; from_json inverts to_json exactly.

#include <json.hpp>

#include "tupletfrob/closed_forms.hpp"
#include "tupletfrob/families.hpp"
#include "tupletfrob/semigroup.hpp"
#include "tupletfrob/tuplets.hpp"
#include "tupletfrob/verification.hpp"

namespace tupletfrob {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void to_json(json& j, const QuadraticPoly& p);
void from_json(const json& j, QuadraticPoly& p);
void to_json(json& j, const KPoly& p);
void from_json(const json& j, KPoly& p);
void to_json(json& j, const OffsetPattern& p);
void to_json(json& j, const GeneratorSet& g);
void to_json(json& j, const AperySet& a);
void to_json(json& j, const SemigroupInvariants& s);
void from_json(const json& j, SemigroupInvariants& s);
void to_json(json& j, const AdmissibilityReport& r);
void from_json(const json& j, AdmissibilityReport& r);
void to_json(json& j, const SmallestDiameter& s);
void from_json(const json& j, SmallestDiameter& s);
void to_json(json& j, const PrimeTuplet& t);
void to_json(json& j, const Classification& c);
void from_json(const json& j, Classification& c);
void to_json(json& j, const FamilyDescriptor& f);
void to_json(json& j, const OracleResult& r);
void from_json(const json& j, OracleResult& r);
void to_json(json& j, const Mismatch& m);
void from_json(const json& j, Mismatch& m);
void to_json(json& j, const SweepEntry& e);
void from_json(const json& j, SweepEntry& e);
void to_json(json& j, const SweepReport& r);
void from_json(const json& j, SweepReport& r);
void to_json(json& j, const ConjectureFit& f);
void to_json(json& j, FamilyId id);
void from_json(const json& j, FamilyId& id);

}  // namespace tupletfrob

// Types without a default state deserialize through adl_serializer.
namespace nlohmann {

template <>
struct adl_serializer<tupletfrob::Rational> {
  static tupletfrob::Rational from_json(const json& j);
  static void to_json(json& j, const tupletfrob::Rational& r) { tupletfrob::to_json(j, r); }
};

template <>
struct adl_serializer<tupletfrob::OffsetPattern> {
  static tupletfrob::OffsetPattern from_json(const json& j);
  static void to_json(json& j, const tupletfrob::OffsetPattern& p) { tupletfrob::to_json(j, p); }
};

template <>
struct adl_serializer<tupletfrob::GeneratorSet> {
  static tupletfrob::GeneratorSet from_json(const json& j);
  static void to_json(json& j, const tupletfrob::GeneratorSet& g) { tupletfrob::to_json(j, g); }
};

template <>
struct adl_serializer<tupletfrob::AperySet> {
  static tupletfrob::AperySet from_json(const json& j);
  static void to_json(json& j, const tupletfrob::AperySet& a) { tupletfrob::to_json(j, a); }
};

template <>
struct adl_serializer<tupletfrob::PrimeTuplet> {
  static tupletfrob::PrimeTuplet from_json(const json& j);
  static void to_json(json& j, const tupletfrob::PrimeTuplet& t) { tupletfrob::to_json(j, t); }
};

template <>
struct adl_serializer<tupletfrob::FamilyDescriptor> {
  static tupletfrob::FamilyDescriptor from_json(const json& j);
  static void to_json(json& j, const tupletfrob::FamilyDescriptor& f) { tupletfrob::to_json(j, f); }
};

template <>
struct adl_serializer<tupletfrob::ConjectureFit> {
  static tupletfrob::ConjectureFit from_json(const json& j);
  static void to_json(json& j, const tupletfrob::ConjectureFit& f) { tupletfrob::to_json(j, f); }
};

}  // namespace nlohmann
