#include "tupletfrob/families.hpp"

#include <array>
#include <numeric>

namespace tupletfrob {

namespace {

QuadraticPoly over(i64 n2, i64 n1, i64 n0, i64 den) {
  return {Rational(n2, den), Rational(n1, den), Rational(n0, den)};
}

std::vector<FamilyDescriptor> build_registry() {
  const auto triplet_a = OffsetPattern::from({0, 2, 6});
  const auto triplet_b = OffsetPattern::from({0, 4, 6});
  const auto quadruplet = OffsetPattern::from({0, 2, 6, 8});
  const auto quintuplet_a = OffsetPattern::from({0, 2, 6, 8, 12});
  const auto quintuplet_b = OffsetPattern::from({0, 4, 6, 10, 12});
  const auto sextuplet = OffsetPattern::from({0, 4, 6, 10, 12, 16});
  const auto septuplet_a = OffsetPattern::from({0, 2, 6, 8, 12, 18, 20});
  const auto septuplet_b = OffsetPattern::from({0, 2, 8, 12, 14, 18, 20});

  std::vector<FamilyDescriptor> r;
  // id, pattern, modulus, residue, k_min, F(p), type, type_k_min, F(k), g(k), PF(k), Apéry form
  r.push_back({FamilyId::T1, triplet_a, 6, 5, 0, over(1, 4, -6, 3), 2, 0,
               KPoly{12, 28, 13}, KPoly{6, 16, 8}, {{12, 28, 9}, {12, 28, 13}}, true});
  r.push_back({FamilyId::T2, triplet_b, 6, 7, 0, over(1, 5, 6, 3), 2, 0,
               KPoly{12, 38, 30}, KPoly{6, 20, 16}, {{12, 32, 15}, {12, 38, 30}}, true});
  r.push_back({FamilyId::Q1, quadruplet, 4, 5, 1, over(1, 3, -8, 4), 5, 1,
               KPoly{4, 13, 8}, KPoly{2, 8, 7},
               {{0, 4, 9}, {4, 13, 2}, {4, 13, 4}, {4, 13, 6}, {4, 13, 8}}, true});
  r.push_back({FamilyId::Q2, quadruplet, 4, 7, 0, over(1, 5, -8, 4), 3, 0,
               KPoly{4, 19, 19}, KPoly{2, 10, 12}, {{0, 4, 11}, {4, 19, 17}, {4, 19, 19}}, true});
  r.push_back({FamilyId::Quin1, quintuplet_a, 30, 11, 0, over(1, 7, -12, 6), 6, 0, {}, {}, {}, false});
  r.push_back({FamilyId::Quin2, quintuplet_b, 30, 7, 0, over(1, 11, 12, 6), 4, 1, {}, {}, {}, false});
  r.push_back({FamilyId::Sex7, sextuplet, 120, 7, 0, over(1, 9, 16, 8), 9, 1, {}, {}, {}, false});
  r.push_back({FamilyId::Sex37, sextuplet, 120, 37, 0, over(1, 11, 16, 8), 7, 0, {}, {}, {}, false});
  r.push_back({FamilyId::Sex67, sextuplet, 120, 67, 0, over(1, 13, 16, 8), 5, 0, {}, {}, {}, false});
  r.push_back({FamilyId::Sex97, sextuplet, 120, 97, 0, over(1, 15, 16, 8), 5, 0, {}, {}, {}, false});
  // The septuplet pair (F, type) for the first pattern only holds from p = 41.
  r.push_back({FamilyId::Sep1, septuplet_a, 30, 11, 1, over(1, 9, -20, 10), 13, 1, {}, {}, {}, false});
  r.push_back({FamilyId::Sep2, septuplet_b, 30, 29, 0, over(1, 11, -20, 10), 11, 0, {}, {}, {}, false});
  return r;
}

constexpr std::array<std::string_view, 12> kNames = {
    "T1", "T2", "Q1", "Q2", "Quin1", "Quin2", "Sex7", "Sex37", "Sex67", "Sex97", "Sep1", "Sep2"};

}  // namespace

std::string_view to_string(FamilyId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

FamilyId parse_family_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<FamilyId>(i);
  throw Error(Errc::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

i64 QuadraticPoly::eval_integer(i64 p) const {
  Rational value = (*this)(Rational(p));
  if (!value.is_integer())
    throw Error(Errc::InvalidArgument, "F(" + std::to_string(p) + ") = " + value.str() + " is not an integer");
  return value.num();
}

QuadraticPoly QuadraticPoly::compose_linear(i64 modulus, i64 residue) const {
  const Rational m(modulus);
  const Rational r(residue);
  return {a2 * m * m, (Rational(2) * a2 * r + a1) * m, (a2 * r + a1) * r + a0};
}

std::string QuadraticPoly::str() const {
  const i64 den = std::lcm(std::lcm(a2.den(), a1.den()), a0.den());
  const i64 n2 = (a2 * Rational(den)).num();
  const i64 n1 = (a1 * Rational(den)).num();
  const i64 n0 = (a0 * Rational(den)).num();
  std::string body;
  auto term = [&body](i64 c, const char* var) {
    if (c == 0) return;
    if (!body.empty()) body += c < 0 ? "-" : "+";
    else if (c < 0) body += "-";
    const i64 mag = c < 0 ? -c : c;
    if (mag != 1 || *var == '\0') body += std::to_string(mag);
    body += var;
  };
  term(n2, "p^2");
  term(n1, "p");
  term(n0, "");
  if (body.empty()) body = "0";
  return den == 1 ? body : "(" + body + ")/" + std::to_string(den);
}

std::vector<i64> FamilyDescriptor::generators(i64 k) const {
  const i64 p = p_of(k);
  std::vector<i64> out;
  for (i64 b : pattern.offsets()) out.push_back(checked_add(p, b));
  return out;
}

std::span<const FamilyDescriptor> family_registry() {
  static const std::vector<FamilyDescriptor> registry = build_registry();
  return registry;
}

const FamilyDescriptor& family(FamilyId id) { return family_registry()[static_cast<std::size_t>(id)]; }

std::vector<const FamilyDescriptor*> families_for(const OffsetPattern& pattern) {
  std::vector<const FamilyDescriptor*> out;
  for (const auto& f : family_registry())
    if (f.pattern == pattern) out.push_back(&f);
  return out;
}

}  // namespace tupletfrob
