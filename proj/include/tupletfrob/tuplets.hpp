#pragma once

#include <optional>
#include <vector>

#include "tupletfrob/families.hpp"
#include "tupletfrob/pattern.hpp"

namespace tupletfrob {

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<i64> witness_prime;     // prime whose residues are all covered
  std::vector<i64> residues_at_witness;  // b_i mod witness, in pattern order

  friend bool operator==(const AdmissibilityReport&, const AdmissibilityReport&) = default;
};

/// Admissible iff for every prime q <= k the offsets miss some class mod q;
/// k residues cannot cover a larger modulus.
AdmissibilityReport is_admissible(const OffsetPattern& pattern);

struct SmallestDiameter {
  i64 diameter;
  std::vector<OffsetPattern> patterns;  // lexicographic order

  friend bool operator==(const SmallestDiameter&, const SmallestDiameter&) = default;
};

/// s(k) and every admissible pattern of that diameter, by exhaustive search.
/// 2 <= k <= 10, otherwise KTooLarge.
SmallestDiameter smallest_diameter(int k);

struct PrimeTuplet {
  i64 p;
  OffsetPattern pattern;
  std::vector<i64> primes;

  friend bool operator==(const PrimeTuplet&, const PrimeTuplet&) = default;
};

struct TupletSearch {
  i64 lo = 0;
  i64 hi = 0;
  bool require_consecutive = true;
  bool allow_inadmissible = false;
  unsigned threads = 0;  // 0: default_thread_count()
};

/// Every p in [lo, hi] with all p + b_i prime (and, if requested, no other
/// prime strictly between p and p + diameter), ascending. Sieves
/// [lo, hi + diameter] segment by segment. Throws NotAdmissible unless
/// allow_inadmissible is set.
std::vector<PrimeTuplet> find_tuplets(const OffsetPattern& pattern, const TupletSearch& search);
std::vector<PrimeTuplet> find_tuplets(const OffsetPattern& pattern, i64 lo, i64 hi,
                                      bool require_consecutive = true);

struct Classification {
  FamilyId family;
  i64 k;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Family and parameter k >= 0 with p = modulus * k + residue.
/// UnsupportedPattern if no family uses the pattern; ResidueMismatch if p
/// lies in none of its residue classes with k >= 0.
Classification classify(i64 p, const OffsetPattern& pattern);
/// As above; quadruplets additionally satisfy p = 5 or 11 (mod 12).
Classification classify(const PrimeTuplet& tuplet);

}  // namespace tupletfrob
