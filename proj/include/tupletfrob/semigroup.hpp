#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tupletfrob/arith.hpp"

namespace tupletfrob {

/// A generating set for a numerical semigroup: strictly increasing positive
/// integers with gcd 1.
class GeneratorSet {
 public:
  /// Sorts and deduplicates; throws EmptyInput, NonPositiveElement or
  /// GcdNotOne (the message carries the offending gcd).
  static GeneratorSet from(std::span<const i64> candidates);

  std::span<const i64> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  i64 min() const noexcept { return elements_.front(); }
  i64 max() const noexcept { return elements_.back(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  explicit GeneratorSet(std::vector<i64> elements) : elements_(std::move(elements)) {}
  std::vector<i64> elements_;
};

/// Ap(S, n): table[i] is the least element of S congruent to i modulo n.
class AperySet {
 public:
  AperySet(i64 modulus, std::vector<i64> table);

  i64 modulus() const noexcept { return modulus_; }
  std::span<const i64> table() const noexcept { return table_; }
  i64 operator[](std::size_t residue) const { return table_[residue]; }
  i64 max() const;
  /// The same elements in increasing order.
  std::vector<i64> sorted() const;

  friend bool operator==(const AperySet&, const AperySet&) = default;

 private:
  i64 modulus_;
  std::vector<i64> table_;
};

/// An immutable numerical semigroup <n_1, ..., n_e>. The Apéry table at the
/// multiplicity is built once at construction and drives membership.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(GeneratorSet generators);

  const GeneratorSet& generators() const noexcept { return generators_; }
  i64 multiplicity() const noexcept { return generators_.min(); }
  const AperySet& apery() const noexcept { return apery_; }
  bool is_naturals() const noexcept { return multiplicity() == 1; }

 private:
  GeneratorSet generators_;
  AperySet apery_;
};

struct SemigroupInvariants {
  i64 frobenius = -1;
  i64 genus = 0;
  std::vector<i64> pseudo_frobenius;
  i64 type = 0;
  i64 embedding_dimension = 0;
  std::vector<i64> minimal_generators;

  friend bool operator==(const SemigroupInvariants&, const SemigroupInvariants&) = default;
};

NumericalSemigroup make_semigroup(std::span<const i64> candidates);
inline NumericalSemigroup make_semigroup(std::initializer_list<i64> candidates) {
  return make_semigroup(std::span<const i64>(candidates.begin(), candidates.size()));
}

/// Round-robin residue-table relaxation: for each generator a, each cycle of
/// i -> i + a (mod n) is walked once starting from its current minimum, so
/// the table is exact for <a_1..a_j> after processing a_j. O(n * e).
/// Throws ModulusNotInSemigroup unless n is a positive element of S.
AperySet apery_set(const NumericalSemigroup& s, i64 n);

/// The same relaxation over generators in the order given, without
/// validation; entries stay INT64_MAX for residues the generators never reach.
AperySet apery_from_generators(std::span<const i64> generators, i64 n);

bool contains(const NumericalSemigroup& s, i64 x) noexcept;

/// max(Ap(S, m)) - m at the multiplicity m; -1 for S = N.
i64 frobenius_number(const NumericalSemigroup& s);

/// (sum Ap(S, m)) / m - (m - 1) / 2, evaluated in 128-bit integers.
i64 genus(const NumericalSemigroup& s);

/// PF(S) as w - m over the <=_S-maximal w in Ap(S, m), ascending.
/// w is maximal iff w + a leaves the Apéry set for every generator a.
/// Throws SemigroupIsN for S = N.
std::vector<i64> pseudo_frobenius(const NumericalSemigroup& s);
std::vector<i64> pseudo_frobenius(const NumericalSemigroup& s, const AperySet& ap);

i64 type(const NumericalSemigroup& s);

/// msg(S): the stored generators minus those lying in the semigroup spanned
/// by the remaining ones.
GeneratorSet minimal_generators(const NumericalSemigroup& s);
i64 embedding_dimension(const NumericalSemigroup& s);

/// All invariants at once. For S = N the pseudo-Frobenius list is empty and
/// type is 0; pseudo_frobenius() itself treats that case as an error.
SemigroupInvariants invariants(const NumericalSemigroup& s);

}  // namespace tupletfrob
