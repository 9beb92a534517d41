#include "doctest.h"

#include <string>
#include <vector>

#include "tupletfrob/cli.hpp"
#include "tupletfrob/closed_forms.hpp"
#include "tupletfrob/serialize.hpp"
#include "tupletfrob/tuplets.hpp"

using namespace tupletfrob;
using cli::run;

namespace {

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto env = run(args);
  REQUIRE(env.exit_code == 0);
  return json::parse(env.out);
}

template <class T>
void check_round_trip(const T& value) {
  const json j = value;
  CHECK(j.get<T>() == value);
  CHECK(json::parse(j.dump()) == j);
}

}  // namespace

TEST_CASE("text output") {
  auto f = run({"sg", "frobenius", "--gens", "11,13,17"});
  CHECK(f.exit_code == 0);
  CHECK(f.out == "53\n");

  auto e = run({"formula", "eval", "--family", "Q2", "--k", "1"});
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("F=42") != std::string::npos);
  CHECK(e.out.find("g=24") != std::string::npos);
  CHECK(e.out.find("PF=15,40,42") != std::string::npos);

  auto sk = run({"tuplets", "sk", "--k", "3"});
  CHECK(sk.out == "s(3) = 6\n0,2,6\n0,4,6\n");

  auto ap = run({"sg", "apery", "--gens", "11,13,17"});
  CHECK(ap.out == "0,13,17,26,30,34,43,47,51,60,64\n");
  auto paper = run({"formula", "eval", "--family", "T1", "--k", "1", "--style", "paper"});
  CHECK(paper.out.find("{0; 13, 17; 26, 30, 34; 43, 47, 51; 60, 64}") != std::string::npos);
}

TEST_CASE("json output") {
  const auto f = run_json({"sg", "frobenius", "--gens", "11,13,17"});
  CHECK(f["command"] == "sg frobenius");
  CHECK(f["exit_code"] == 0);
  CHECK(f["result"] == 53);

  const auto e = run_json({"formula", "eval", "--family", "Q2", "--k", "1"});
  CHECK(e["result"]["invariants"]["frobenius"] == 42);
  CHECK(e["result"]["invariants"]["pseudo_frobenius"] == json::array({15, 40, 42}));

  const auto sk = run_json({"tuplets", "sk", "--k", "3"});
  CHECK(sk["result"]["s_k"] == 6);
  CHECK(sk["result"]["patterns"] == json::array({json::array({0, 2, 6}), json::array({0, 4, 6})}));

  const auto found = run_json({"tuplets", "find", "--pattern", "0,2,6,8", "--from", "100", "--to", "110"});
  REQUIRE(found["result"].size() == 1);
  CHECK(found["result"][0]["p"] == 101);
}

TEST_CASE("exit codes") {
  auto gcd = run({"sg", "frobenius", "--gens", "4,6"});
  CHECK(gcd.exit_code == 1);
  CHECK_FALSE(gcd.err.empty());
  CHECK(run({"tuplets", "classify", "--p", "13", "--pattern", "0,2,6"}).exit_code == 1);
  CHECK(run({"formula", "from-p", "--p", "5", "--pattern", "0,2,6,8"}).exit_code == 1);

  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"sg"},
           {"sg", "frobenius"},
           {"sg", "frobenius", "--gens", "4, 6"},
           {"sg", "frobenius", "--gens", "-4,6"},
           {"sg", "frobenius", "--gens", "99999999999999999999999,3"},
           {"sg", "frobenius", "--gens", "3,,5"},
           {"--format", "xml", "sg", "frobenius", "--gens", "3,5"},
           {"formula", "eval", "--family", "T9", "--k", "1"},
           {"verify", "sweep", "--family", "T1", "--k-range", "5"},
           {"nonsense"},
       }) {
    const auto env = run(args);
    CHECK_MESSAGE(env.exit_code == 2, env.command);
    CHECK_FALSE(env.err.empty());
  }
}

TEST_CASE("identical inputs give identical bytes") {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "verify", "sweep", "--family", "Q1", "--k-range", "1..20", "--threads", "4"},
      {"--format", "json", "verify", "conjecture", "--pattern", "0,4,6", "--max-p", "2000"},
      {"--format", "json", "tuplets", "find", "--pattern", "0,2,6", "--from", "0", "--to", "100000"},
      {"formula", "list"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json round trips") {
  check_round_trip(Rational(-7, 3));
  check_round_trip(OffsetPattern::from({0, 2, 6, 8}));
  check_round_trip(GeneratorSet::from(std::vector<i64>{11, 13, 17}));
  check_round_trip(apery_set(make_semigroup({11, 13, 17}), 13));
  check_round_trip(invariants(make_semigroup({101, 103, 107, 109})));
  check_round_trip(is_admissible(OffsetPattern::from({0, 2, 4})));
  check_round_trip(smallest_diameter(5));
  check_round_trip(classify(101, OffsetPattern::from({0, 2, 6, 8})));
  for (const auto& t : find_tuplets(OffsetPattern::from({0, 2, 6}), 0, 1000)) check_round_trip(t);
  check_round_trip(oracle_frobenius(std::vector<i64>{7, 9, 13, 15}));
  check_round_trip(fit_family(FamilyId::Sex67, 5000));
  check_round_trip(FamilyId::Sep2);
  for (const auto& fam : family_registry()) {
    check_round_trip(fam.f_in_p);
    const json j = fam;
    CHECK(json(j.get<FamilyDescriptor>()) == j);
  }

  auto report = sweep_family(FamilyId::T2, 0, 10);
  report.entries[3].match = false;
  report.entries[3].mismatches.push_back({"frobenius", {1}, {2}, {3}});
  check_round_trip(report);
}
