#include "doctest.h"

#include <random>
#include <vector>

#include "support.hpp"
#include "tupletfrob/error.hpp"
#include "tupletfrob/families.hpp"
#include "tupletfrob/verification.hpp"

using namespace tupletfrob;

TEST_CASE("oracle examples") {
  auto a = oracle_frobenius(std::vector<i64>{11, 13, 17});
  CHECK(a.frobenius == 53);
  CHECK(a.genus == 30);
  CHECK(a.pseudo_frobenius == std::vector<i64>{49, 53});
  CHECK(a.gaps.size() == 30);
  CHECK(a.gaps.back() == 53);

  auto b = oracle_frobenius(std::vector<i64>{7, 9, 13, 15});
  CHECK(b.frobenius == 19);
  CHECK(b.genus == 12);

  auto c = oracle_frobenius(std::vector<i64>{1});
  CHECK(c.frobenius == -1);
  CHECK(c.genus == 0);
  CHECK(c.gaps.empty());

  CHECK_THROWS_AS(oracle_frobenius(std::vector<i64>{4, 6}), Error);
  try {
    oracle_frobenius(std::vector<i64>{40'009, 40'013});
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundExceeded);
  }
  // The shortest-path oracle has no such bound.
  CHECK(shortest_path_oracle(std::vector<i64>{40'009, 40'013}).frobenius == 40'009LL * 40'013 - 40'009 - 40'013);
}

TEST_CASE("oracles agree with the engine on random semigroups") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const auto g = testing::random_generators(rng, 200, 1500, 6);
    const auto s = make_semigroup(g);
    const auto dp = oracle_frobenius(g);
    const auto sp = shortest_path_oracle(g);
    REQUIRE(dp.frobenius == frobenius_number(s));
    REQUIRE(dp.genus == genus(s));
    REQUIRE(static_cast<i64>(dp.gaps.size()) == dp.genus);
    REQUIRE(sp.frobenius == dp.frobenius);
    REQUIRE(sp.genus == dp.genus);
    REQUIRE(sp.pseudo_frobenius == dp.pseudo_frobenius);
    if (!s.is_naturals()) REQUIRE(dp.pseudo_frobenius == pseudo_frobenius(s));
  }
}

TEST_CASE("sweeps") {
  const auto t1 = sweep_family(FamilyId::T1, 0, 50);
  CHECK(t1.entries.size() == 51);
  CHECK(t1.all_match());
  CHECK(t1.entries.front().k == 0);
  CHECK(t1.entries.back().k == 50);

  CHECK(sweep_family(FamilyId::Q1, 1, 50).all_match());

  const auto q10 = sweep_family(FamilyId::Q1, 0, 0);
  CHECK(q10.all_match());

  CHECK(sweep_family(FamilyId::Sex37, 0, 4).all_match());
  // Below the septuplet threshold the tabulated F does not apply.
  CHECK_THROWS_AS(sweep_family(FamilyId::Sep1, 0, 2), Error);
  CHECK(sweep_family(FamilyId::Sep1, 1, 3).all_match());

  // Thread count does not change the report.
  auto one = sweep_family(FamilyId::T2, 0, 30, 1);
  auto many = sweep_family(FamilyId::T2, 0, 30, 4);
  one.wall_seconds = many.wall_seconds = 0;
  CHECK(one == many);
}

TEST_CASE("conjecture fits") {
  const auto t1 = fit_family(FamilyId::T1, 10'000);
  CHECK(t1.exact);
  CHECK(t1.fit.a2 == Rational(1, 3));
  CHECK(t1.fit.a1 == Rational(4, 3));
  CHECK(t1.fit.a0 == Rational(-2));
  CHECK(t1.a2_equals_2_over_q);
  CHECK(t1.a0_integer);

  ConjectureQuery q{.pattern = OffsetPattern::from({0, 2, 6, 8}), .modulus = 4, .residue = 3, .min_p = 7, .max_p = 10'000};
  const auto q2 = fit_conjecture(q);
  CHECK(q2.exact);
  CHECK(q2.fit.a2 == Rational(1, 4));
  CHECK(q2.fit.a0 == Rational(-2));

  for (const auto& fam : family_registry()) {
    const auto fit = fit_family(fam.id, 3'000);
    CHECK_MESSAGE(fit.exact, to_string(fam.id));
    CHECK(fit.fit == fam.f_in_p);
  }

  q.max_p = 18;
  CHECK_THROWS_AS(fit_conjecture(q), Error);

  // p = 3 is in the class but <3,5,9,11> = <3,5> is off the curve.
  q.min_p = 3;
  q.max_p = 10'000;
  const auto from3 = fit_conjecture(q);
  CHECK_FALSE(from3.exact);

  // Octuplets: one residue mod 210 mixes several quadratics.
  const ConjectureQuery oct{
      .pattern = OffsetPattern::from({0, 2, 6, 8, 12, 18, 20, 26}), .modulus = 210, .residue = 11, .max_p = 20'000};
  const auto mixed = fit_conjecture(oct);
  CHECK_FALSE(mixed.exact);
  CHECK_FALSE(mixed.residual_failures.empty());

  CHECK(default_conjecture_modulus(oct.pattern) == 2730);
  CHECK(default_conjecture_modulus(OffsetPattern::from({0, 2, 6})) == 6);
  CHECK(default_conjecture_modulus(OffsetPattern::from({0, 4, 6, 10, 12, 16})) == 120);
  CHECK(admissible_residues(OffsetPattern::from({0, 2, 6}), 6) == std::vector<i64>{5});
}
