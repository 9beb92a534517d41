#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tupletfrob/families.hpp"
#include "tupletfrob/pattern.hpp"

namespace tupletfrob {

struct OracleResult {
  i64 frobenius = -1;
  i64 genus = 0;
  std::vector<i64> pseudo_frobenius;
  std::vector<i64> gaps;  // empty unless listed by the dynamic program

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

/// Largest n_1 * n_e the dynamic program accepts.
inline constexpr i64 kOracleBound = 1'000'000'000;

/// Brute-force reachability over [0, n_1 * n_e]: marks every sum of
/// generators, stopping after n_1 consecutive hits. F(S) < n_1 * n_e for
/// e >= 2, so the window always contains F. Shares no code with the Apéry
/// engine. Throws GcdNotOne, BoundExceeded, EmptyInput, NonPositiveElement.
OracleResult oracle_frobenius(std::span<const i64> generators, bool list_gaps = true);

/// Dijkstra over residues mod n_1 (Nijenhuis). Gaps are not listed; genus
/// is the sum of floor(dist / n_1). Handles multiplicities far beyond the
/// dynamic program's reach.
OracleResult shortest_path_oracle(std::span<const i64> generators);

/// oracle_frobenius without gap listing when n_1 * n_e <= dp_limit,
/// shortest_path_oracle otherwise.
inline constexpr i64 kReferenceDpLimit = 100'000'000;
OracleResult reference_oracle(std::span<const i64> generators, i64 dp_limit = kReferenceDpLimit);

struct Mismatch {
  std::string field;
  std::vector<i64> closed_form;  // empty when the family has no closed form for the field
  std::vector<i64> engine;
  std::vector<i64> oracle;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SweepEntry {
  i64 k = 0;
  bool match = true;
  std::vector<Mismatch> mismatches;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepReport {
  FamilyId family = FamilyId::T1;
  i64 k_lo = 0;
  i64 k_hi = 0;
  std::vector<SweepEntry> entries;  // ordered by k
  double wall_seconds = 0.0;

  std::size_t mismatch_count() const;
  bool all_match() const { return mismatch_count() == 0; }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// For each k compares the closed forms against the Apéry engine and the
/// reference oracle: Apéry set, F, g, PF and type (where tabulated) for the
/// triplet/quadruplet families; F and type for the larger tuplets, plus an
/// engine/oracle cross-check of g and PF. KBelowMinimum if k_lo < k_min,
/// except that Q1 accepts k = 0 through its special case.
SweepReport sweep_family(FamilyId id, i64 k_lo, i64 k_hi, unsigned threads = 0);

struct ConjectureQuery {
  OffsetPattern pattern;
  i64 modulus = 1;
  i64 residue = 0;
  i64 min_p = 2;
  i64 max_p = 0;
  bool primes_only = false;  // only p where every p + b_i is prime
  unsigned threads = 0;
};

struct ConjectureFit {
  OffsetPattern pattern;
  i64 modulus = 1;
  i64 residue = 0;
  std::vector<std::pair<i64, i64>> samples{};  // (p, F)
  QuadraticPoly fit{};
  bool exact = false;
  bool a2_equals_2_over_q = false;
  bool a0_integer = false;
  std::vector<i64> residual_failures{};  // p values off the fitted curve

  friend bool operator==(const ConjectureFit&, const ConjectureFit&) = default;
};

/// Exact rational quadratic through the first three samples (Newton divided
/// differences), then zero-residual check on the rest. F(p) comes from the
/// Apéry engine. InsufficientSamples below four samples; a nonzero residual
/// is reported through `exact` and `residual_failures`.
ConjectureFit fit_conjecture(const ConjectureQuery& query);

/// fit_conjecture over a registered family's residue class, starting at k_min.
ConjectureFit fit_family(FamilyId id, i64 max_p, unsigned threads = 0);

/// Residues r mod `modulus` for which no p + b_i is divisible by a prime
/// factor of `modulus`.
std::vector<i64> admissible_residues(const OffsetPattern& pattern, i64 modulus);

/// lcm(product of primes <= k, diameter / 2): the modulus whose residue
/// classes carry one quadratic each for every registered family (6, 12,
/// 30, 120, 210) and 2730 for the octuplets.
i64 default_conjecture_modulus(const OffsetPattern& pattern);

/// One fit per registered family using the pattern; for unregistered
/// patterns one fit per admissible residue mod default_conjecture_modulus.
/// Classes with fewer than four samples are skipped; InsufficientSamples if
/// none remain.
std::vector<ConjectureFit> fit_pattern(const OffsetPattern& pattern, i64 max_p, bool primes_only = false,
                                       unsigned threads = 0);

}  // namespace tupletfrob
