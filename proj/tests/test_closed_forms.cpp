#include "doctest.h"

#include <vector>

#include "tupletfrob/closed_forms.hpp"
#include "tupletfrob/error.hpp"
#include "tupletfrob/families.hpp"
#include "tupletfrob/verification.hpp"

using namespace tupletfrob;

namespace {

constexpr FamilyId kApery[] = {FamilyId::T1, FamilyId::T2, FamilyId::Q1, FamilyId::Q2};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("lemma identities") {
  CHECK(lemma_identities(FamilyId::T1, 1));
  CHECK(lemma_identities(FamilyId::Q2, 0));
  CHECK(code_of([] { lemma_identities(FamilyId::Q1, 0); }) == Errc::KBelowMinimum);
  CHECK(code_of([] { lemma_identities(FamilyId::Quin1, 3); }) == Errc::InvalidArgument);
  for (FamilyId id : kApery)
    for (i64 k = family(id).k_min; k <= 10'000; ++k) REQUIRE(lemma_identities(id, k));
}

TEST_CASE("apery closed forms") {
  CHECK(apery_closed_form(FamilyId::T1, 1).sorted() == std::vector<i64>{0, 13, 17, 26, 30, 34, 43, 47, 51, 60, 64});
  CHECK(apery_closed_form(FamilyId::T2, 0).sorted() == std::vector<i64>{0, 11, 13, 22, 24, 26, 37});
  CHECK(apery_closed_form(FamilyId::Q2, 1).sorted() == std::vector<i64>{0, 13, 17, 19, 26, 32, 34, 36, 38, 51, 53});
  CHECK(apery_closed_form(FamilyId::Q2, 0).sorted() == std::vector<i64>{0, 9, 13, 15, 18, 24, 26});

  for (FamilyId id : kApery) {
    const auto& fam = family(id);
    for (i64 k = fam.k_min; k <= 60; ++k) {
      const auto gens = fam.generators(k);
      const auto s = make_semigroup(gens);
      REQUIRE(apery_closed_form(id, k) == apery_set(s, gens.front()));
    }
  }
}

TEST_CASE("index set cardinality") {
  for (FamilyId id : kApery) {
    const auto& fam = family(id);
    for (i64 k = fam.k_min; k <= 2'000; ++k)
      REQUIRE(static_cast<i64>(apery_index_set(id, k).size()) == fam.p_of(k));
  }
  CHECK(apery_index_set(FamilyId::T1, 3).size() == 23);
  CHECK(apery_index_set(FamilyId::T2, 3).size() == 25);
  CHECK(apery_index_set(FamilyId::Q1, 3).size() == 17);
  CHECK(apery_index_set(FamilyId::Q2, 3).size() == 19);
}

TEST_CASE("grouped layout") {
  CHECK(format_apery_grouped(FamilyId::T1, 1) == "{0; 13, 17; 26, 30, 34; 43, 47, 51; 60, 64}");
  CHECK(format_apery_grouped(FamilyId::T2, 0) == "{0; 11, 13; 22, 24, 26; 37}");
  CHECK(format_apery_grouped(FamilyId::Q2, 1) == "{0; 13, 17, 19; 26; 32, 34, 36, 38; 51, 53}");
  CHECK(format_apery_grouped(FamilyId::Q2, 0) == "{0; 9, 13, 15; 18; 24, 26}");
}

TEST_CASE("invariants from closed forms") {
  auto t1 = invariants_closed_form(FamilyId::T1, 1);
  CHECK(t1.frobenius == 53);
  CHECK(t1.genus == 30);
  CHECK(t1.pseudo_frobenius == std::vector<i64>{49, 53});
  CHECK(t1.type == 2);
  CHECK(t1.embedding_dimension == 3);

  auto q1 = invariants_closed_form(FamilyId::Q1, 24);
  CHECK(q1.frobenius == 2624);
  CHECK(q1.genus == 1351);
  CHECK(q1.pseudo_frobenius == std::vector<i64>{105, 2618, 2620, 2622, 2624});

  auto q2 = invariants_closed_form(FamilyId::Q2, 1);
  CHECK(q2.frobenius == 42);
  CHECK(q2.genus == 24);
  CHECK(q2.pseudo_frobenius == std::vector<i64>{15, 40, 42});

  // <5,7,11,13>: 9 = 7 + 2 is the largest gap, so F = 9, not 8.
  auto q10 = invariants_closed_form(FamilyId::Q1, 0);
  CHECK(q10.frobenius == 9);
  CHECK(q10.genus == 7);
  CHECK(q10.pseudo_frobenius == std::vector<i64>{6, 8, 9});
  CHECK(q10.type == 3);
  CHECK(q10.frobenius == oracle_frobenius(std::vector<i64>{5, 7, 11, 13}).frobenius);

  for (FamilyId id : kApery) {
    const auto& fam = family(id);
    for (i64 k = fam.k_min; k <= 40; ++k) {
      const auto expect = invariants(make_semigroup(fam.generators(k)));
      const auto got = invariants_closed_form(id, k);
      REQUIRE(got.frobenius == expect.frobenius);
      REQUIRE(got.genus == expect.genus);
      REQUIRE(got.pseudo_frobenius == expect.pseudo_frobenius);
      REQUIRE(got.type == expect.type);
      REQUIRE(got.minimal_generators == expect.minimal_generators);
    }
  }
}

TEST_CASE("frobenius from p") {
  CHECK(frobenius_from_p(11, OffsetPattern::from({0, 2, 6})) == 53);
  CHECK(frobenius_from_p(7, OffsetPattern::from({0, 4, 6})) == 30);
  CHECK(frobenius_from_p(101, OffsetPattern::from({0, 2, 6, 8})) == 2624);

  const std::vector<i64> quin{11, 13, 17, 19, 23};
  CHECK(oracle_frobenius(quin).frobenius == 31);
  CHECK(frobenius_from_p(11, OffsetPattern::from({0, 2, 6, 8, 12})) == 31);

  CHECK(code_of([] { frobenius_from_p(5, OffsetPattern::from({0, 2, 6, 8})); }) == Errc::KBelowMinimum);
  CHECK(code_of([] { frobenius_from_p(11, OffsetPattern::from({0, 2, 6, 8, 12, 18, 20})); }) == Errc::KBelowMinimum);
  CHECK(code_of([] { frobenius_from_p(13, OffsetPattern::from({0, 2, 6})); }) == Errc::ResidueMismatch);
  CHECK(code_of([] { frobenius_from_p(11, OffsetPattern::from({0, 2, 8})); }) == Errc::UnsupportedPattern);

  // Every registered family, not only at prime p.
  for (const auto& fam : family_registry()) {
    for (i64 k = fam.k_min; k <= 12; ++k) {
      const i64 p = fam.p_of(k);
      REQUIRE(frobenius_from_p(p, fam.pattern) == oracle_frobenius(fam.generators(k), false).frobenius);
    }
  }
}

TEST_CASE("types") {
  for (i64 k = 0; k < 10; ++k) CHECK(type_from_family(FamilyId::T1, k) == 2);
  CHECK(type_from_family(FamilyId::Q1, 3) == 5);
  CHECK(type_from_family(FamilyId::Quin1, 0) == 6);
  CHECK(code_of([] { type_from_family(FamilyId::Quin2, 0); }) == Errc::KBelowMinimum);
  CHECK(code_of([] { type_from_family(FamilyId::Sep1, 0); }) == Errc::KBelowMinimum);

  for (const auto& fam : family_registry()) {
    for (i64 k = fam.type_k_min; k <= 6; ++k) REQUIRE(type_from_family(fam.id, k) == type(make_semigroup(fam.generators(k))));
  }
}

TEST_CASE("polynomial composition") {
  for (const auto& fam : family_registry()) {
    const auto in_k = fam.f_in_p.compose_linear(fam.p_modulus, fam.p_residue);
    for (i64 k = 0; k < 50; ++k) REQUIRE(in_k(Rational(k)) == fam.f_in_p(Rational(fam.p_of(k))));
    if (fam.f_in_k) {
      CHECK(in_k.a2 == Rational(fam.f_in_k->c2));
      CHECK(in_k.a1 == Rational(fam.f_in_k->c1));
      CHECK(in_k.a0 == Rational(fam.f_in_k->c0));
    }
  }
  CHECK(family(FamilyId::T1).f_in_p.str() == "(p^2+4p-6)/3");
}
