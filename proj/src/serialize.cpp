#include "tupletfrob/serialize.hpp"

namespace tupletfrob {

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const QuadraticPoly& p) {
  j = json{{"a2", p.a2}, {"a1", p.a1}, {"a0", p.a0}, {"text", p.str()}};
}
void from_json(const json& j, QuadraticPoly& p) {
  p.a2 = j.at("a2").get<Rational>();
  p.a1 = j.at("a1").get<Rational>();
  p.a0 = j.at("a0").get<Rational>();
}

void to_json(json& j, const KPoly& p) { j = json::array({p.c2, p.c1, p.c0}); }
void from_json(const json& j, KPoly& p) { p = {j.at(0).get<i64>(), j.at(1).get<i64>(), j.at(2).get<i64>()}; }

void to_json(json& j, const OffsetPattern& p) { j = std::vector<i64>(p.offsets().begin(), p.offsets().end()); }
void to_json(json& j, const GeneratorSet& g) { j = std::vector<i64>(g.elements().begin(), g.elements().end()); }

void to_json(json& j, const AperySet& a) {
  j = json{{"modulus", a.modulus()}, {"table", std::vector<i64>(a.table().begin(), a.table().end())}};
}

void to_json(json& j, const SemigroupInvariants& s) {
  j = json{{"frobenius", s.frobenius},
           {"genus", s.genus},
           {"pseudo_frobenius", s.pseudo_frobenius},
           {"type", s.type},
           {"embedding_dimension", s.embedding_dimension},
           {"minimal_generators", s.minimal_generators}};
}
void from_json(const json& j, SemigroupInvariants& s) {
  j.at("frobenius").get_to(s.frobenius);
  j.at("genus").get_to(s.genus);
  j.at("pseudo_frobenius").get_to(s.pseudo_frobenius);
  j.at("type").get_to(s.type);
  j.at("embedding_dimension").get_to(s.embedding_dimension);
  j.at("minimal_generators").get_to(s.minimal_generators);
}

void to_json(json& j, const AdmissibilityReport& r) {
  j = json{{"admissible", r.admissible},
           {"witness_prime", r.witness_prime ? json(*r.witness_prime) : json(nullptr)},
           {"residues_at_witness", r.residues_at_witness}};
}
void from_json(const json& j, AdmissibilityReport& r) {
  j.at("admissible").get_to(r.admissible);
  const auto& w = j.at("witness_prime");
  r.witness_prime = w.is_null() ? std::nullopt : std::optional<i64>(w.get<i64>());
  j.at("residues_at_witness").get_to(r.residues_at_witness);
}

void to_json(json& j, const SmallestDiameter& s) { j = json{{"s_k", s.diameter}, {"patterns", s.patterns}}; }
void from_json(const json& j, SmallestDiameter& s) {
  j.at("s_k").get_to(s.diameter);
  s.patterns = j.at("patterns").get<std::vector<OffsetPattern>>();
}

void to_json(json& j, const PrimeTuplet& t) { j = json{{"p", t.p}, {"pattern", t.pattern}, {"primes", t.primes}}; }

void to_json(json& j, FamilyId id) { j = std::string(to_string(id)); }
void from_json(const json& j, FamilyId& id) { id = parse_family_id(j.get<std::string>()); }

void to_json(json& j, const Classification& c) { j = json{{"family", c.family}, {"k", c.k}}; }
void from_json(const json& j, Classification& c) {
  j.at("family").get_to(c.family);
  j.at("k").get_to(c.k);
}

void to_json(json& j, const FamilyDescriptor& f) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  j = json{{"id", f.id},
           {"pattern", f.pattern},
           {"p_modulus", f.p_modulus},
           {"p_residue", f.p_residue},
           {"k_min", f.k_min},
           {"F_in_p", f.f_in_p},
           {"type", opt(f.type_value)},
           {"type_k_min", f.type_k_min},
           {"F_in_k", opt(f.f_in_k)},
           {"g_in_k", opt(f.g_in_k)},
           {"PF_in_k", f.pf_in_k},
           {"apery_closed_form", f.has_apery_closed_form}};
}

void to_json(json& j, const OracleResult& r) {
  j = json{{"frobenius", r.frobenius}, {"genus", r.genus}, {"pseudo_frobenius", r.pseudo_frobenius}, {"gaps", r.gaps}};
}
void from_json(const json& j, OracleResult& r) {
  j.at("frobenius").get_to(r.frobenius);
  j.at("genus").get_to(r.genus);
  j.at("pseudo_frobenius").get_to(r.pseudo_frobenius);
  j.at("gaps").get_to(r.gaps);
}

void to_json(json& j, const Mismatch& m) {
  j = json{{"field", m.field}, {"closed_form", m.closed_form}, {"engine", m.engine}, {"oracle", m.oracle}};
}
void from_json(const json& j, Mismatch& m) {
  j.at("field").get_to(m.field);
  j.at("closed_form").get_to(m.closed_form);
  j.at("engine").get_to(m.engine);
  j.at("oracle").get_to(m.oracle);
}

void to_json(json& j, const SweepEntry& e) { j = json{{"k", e.k}, {"match", e.match}, {"mismatches", e.mismatches}}; }
void from_json(const json& j, SweepEntry& e) {
  j.at("k").get_to(e.k);
  j.at("match").get_to(e.match);
  j.at("mismatches").get_to(e.mismatches);
}

void to_json(json& j, const SweepReport& r) {
  j = json{{"family", r.family},       {"k_lo", r.k_lo},
           {"k_hi", r.k_hi},          {"entries", r.entries},
           {"mismatches", r.mismatch_count()}, {"wall_seconds", r.wall_seconds}};
}
void from_json(const json& j, SweepReport& r) {
  j.at("family").get_to(r.family);
  j.at("k_lo").get_to(r.k_lo);
  j.at("k_hi").get_to(r.k_hi);
  j.at("entries").get_to(r.entries);
  j.at("wall_seconds").get_to(r.wall_seconds);
}

void to_json(json& j, const ConjectureFit& f) {
  json samples = json::array();
  for (const auto& [p, value] : f.samples) samples.push_back(json::array({p, value}));
  j = json{{"pattern", f.pattern},
           {"modulus", f.modulus},
           {"residue", f.residue},
           {"samples", samples},
           {"fit", f.fit},
           {"exact", f.exact},
           {"a2_equals_2_over_q", f.a2_equals_2_over_q},
           {"a0_integer", f.a0_integer},
           {"residual_failures", f.residual_failures}};
}

}  // namespace tupletfrob

namespace nlohmann {

using tupletfrob::i64;

tupletfrob::Rational adl_serializer<tupletfrob::Rational>::from_json(const json& j) {
  return tupletfrob::Rational::parse(j.get<std::string>());
}

tupletfrob::OffsetPattern adl_serializer<tupletfrob::OffsetPattern>::from_json(const json& j) {
  return tupletfrob::OffsetPattern::from(j.get<std::vector<i64>>());
}

tupletfrob::GeneratorSet adl_serializer<tupletfrob::GeneratorSet>::from_json(const json& j) {
  return tupletfrob::GeneratorSet::from(j.get<std::vector<i64>>());
}

tupletfrob::AperySet adl_serializer<tupletfrob::AperySet>::from_json(const json& j) {
  return tupletfrob::AperySet(j.at("modulus").get<i64>(), j.at("table").get<std::vector<i64>>());
}

tupletfrob::PrimeTuplet adl_serializer<tupletfrob::PrimeTuplet>::from_json(const json& j) {
  return {j.at("p").get<i64>(), j.at("pattern").get<tupletfrob::OffsetPattern>(), j.at("primes").get<std::vector<i64>>()};
}

tupletfrob::FamilyDescriptor adl_serializer<tupletfrob::FamilyDescriptor>::from_json(const json& j) {
  using namespace tupletfrob;
  auto opt_i64 = [](const json& v) { return v.is_null() ? std::nullopt : std::optional<i64>(v.get<i64>()); };
  auto opt_poly = [](const json& v) { return v.is_null() ? std::nullopt : std::optional<KPoly>(v.get<KPoly>()); };
  return FamilyDescriptor{j.at("id").get<FamilyId>(),
                          j.at("pattern").get<OffsetPattern>(),
                          j.at("p_modulus").get<i64>(),
                          j.at("p_residue").get<i64>(),
                          j.at("k_min").get<i64>(),
                          j.at("F_in_p").get<QuadraticPoly>(),
                          opt_i64(j.at("type")),
                          j.at("type_k_min").get<i64>(),
                          opt_poly(j.at("F_in_k")),
                          opt_poly(j.at("g_in_k")),
                          j.at("PF_in_k").get<std::vector<KPoly>>(),
                          j.at("apery_closed_form").get<bool>()};
}

tupletfrob::ConjectureFit adl_serializer<tupletfrob::ConjectureFit>::from_json(const json& j) {
  using namespace tupletfrob;
  ConjectureFit f{.pattern = j.at("pattern").get<OffsetPattern>()};
  j.at("modulus").get_to(f.modulus);
  j.at("residue").get_to(f.residue);
  for (const auto& s : j.at("samples")) f.samples.emplace_back(s.at(0).get<i64>(), s.at(1).get<i64>());
  f.fit = j.at("fit").get<QuadraticPoly>();
  j.at("exact").get_to(f.exact);
  j.at("a2_equals_2_over_q").get_to(f.a2_equals_2_over_q);
  j.at("a0_integer").get_to(f.a0_integer);
  j.at("residual_failures").get_to(f.residual_failures);
  return f;
}

}  // namespace nlohmann
