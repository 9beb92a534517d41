#pragma once

// Test-only helpers: random generator sets and a pairwise pseudo-Frobenius
// reference that does not use the generator-step criterion.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tupletfrob/semigroup.hpp"

namespace tupletfrob::testing {

inline std::vector<i64> random_generators(std::mt19937_64& rng, i64 max_multiplicity, i64 max_gen, int max_count) {
  std::uniform_int_distribution<i64> mult(2, max_multiplicity);
  std::uniform_int_distribution<int> count(2, max_count);
  while (true) {
    const i64 m = mult(rng);
    std::uniform_int_distribution<i64> pick(m + 1, std::max(m + 1, max_gen));
    std::vector<i64> g{m};
    const int c = count(rng);
    for (int i = 1; i < c; ++i) g.push_back(pick(rng));
    i64 d = 0;
    for (i64 x : g) d = std::gcd(d, x);
    if (d == 1) return g;
  }
}

/// w in Ap(S, n) is maximal iff no other w' in the set has w' - w in S.
inline std::vector<i64> pairwise_pseudo_frobenius(const NumericalSemigroup& s) {
  const auto& ap = s.apery();
  std::vector<i64> out;
  for (i64 w : ap.table()) {
    bool maximal = true;
    for (i64 v : ap.table())
      if (v != w && contains(s, v - w)) maximal = false;
    if (maximal) out.push_back(w - ap.modulus());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tupletfrob::testing
