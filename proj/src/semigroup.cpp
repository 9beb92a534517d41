#include "tupletfrob/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace tupletfrob {

namespace {

constexpr i64 kUnreached = std::numeric_limits<i64>::max();

// Relaxes `table` (indexed by residue mod n) with every generator in turn.
void round_robin(std::vector<i64>& table, std::span<const i64> generators) {
  const i64 n = static_cast<i64>(table.size());
  for (i64 a : generators) {
    const i64 step = a % n;
    if (step == 0) continue;
    const i64 cycles = std::gcd(step, n);
    const i64 length = n / cycles;
    for (i64 start = 0; start < cycles; ++start) {
      i64 best = start;
      for (i64 i = 0, idx = start; i < length; ++i, idx = (idx + step) % n)
        if (table[idx] < table[best]) best = idx;
      if (table[best] == kUnreached) continue;
      for (i64 i = 0, idx = best; i < length; ++i) {
        const i64 next = (idx + step) % n;
        const i64 candidate = checked_add(table[idx], a);
        if (candidate < table[next]) table[next] = candidate;
        idx = next;
      }
    }
  }
}

std::vector<i64> residue_table(std::span<const i64> generators, i64 n) {
  std::vector<i64> table(static_cast<std::size_t>(n), kUnreached);
  table[0] = 0;
  round_robin(table, generators);
  return table;
}

}  // namespace

GeneratorSet GeneratorSet::from(std::span<const i64> candidates) {
  if (candidates.empty()) throw Error(Errc::EmptyInput, "generator list is empty");
  std::vector<i64> elements(candidates.begin(), candidates.end());
  for (i64 x : elements)
    if (x <= 0) throw Error(Errc::NonPositiveElement, "generator " + std::to_string(x) + " is not positive");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  i64 g = 0;
  for (i64 x : elements) g = std::gcd(g, x);
  if (g != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(g));
  return GeneratorSet(std::move(elements));
}

AperySet::AperySet(i64 modulus, std::vector<i64> table) : modulus_(modulus), table_(std::move(table)) {
  if (modulus_ <= 0 || static_cast<i64>(table_.size()) != modulus_)
    throw Error(Errc::InvalidArgument, "Apéry table size must equal its modulus");
}

i64 AperySet::max() const { return *std::max_element(table_.begin(), table_.end()); }

std::vector<i64> AperySet::sorted() const {
  std::vector<i64> out(table_.begin(), table_.end());
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup::NumericalSemigroup(GeneratorSet generators)
    : generators_(std::move(generators)),
      apery_(generators_.min(), residue_table(generators_.elements(), generators_.min())) {}

NumericalSemigroup make_semigroup(std::span<const i64> candidates) {
  return NumericalSemigroup(GeneratorSet::from(candidates));
}

AperySet apery_from_generators(std::span<const i64> generators, i64 n) {
  if (n <= 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  return AperySet(n, residue_table(generators, n));
}

bool contains(const NumericalSemigroup& s, i64 x) noexcept {
  if (x < 0) return false;
  const auto& ap = s.apery();
  return x >= ap[static_cast<std::size_t>(x % ap.modulus())];
}

AperySet apery_set(const NumericalSemigroup& s, i64 n) {
  if (n <= 0 || !contains(s, n))
    throw Error(Errc::ModulusNotInSemigroup, std::to_string(n) + " is not a nonzero element of S");
  if (n == s.multiplicity()) return s.apery();
  return AperySet(n, residue_table(s.generators().elements(), n));
}

i64 frobenius_number(const NumericalSemigroup& s) {
  return s.apery().max() - s.multiplicity();
}

i64 genus(const NumericalSemigroup& s) {
  const auto& ap = s.apery();
  const i128 n = ap.modulus();
  i128 sum = 0;
  for (i64 w : ap.table()) sum += w;
  const i128 numerator = 2 * sum - n * (n - 1);
  if (numerator % (2 * n) != 0) throw Error(Errc::InvalidArgument, "Apéry sum is not consistent with a numerical semigroup");
  return narrow(numerator / (2 * n));
}

std::vector<i64> pseudo_frobenius(const NumericalSemigroup& s, const AperySet& ap) {
  if (s.is_naturals()) throw Error(Errc::SemigroupIsN, "S = N has no pseudo-Frobenius numbers");
  const i64 n = ap.modulus();
  const auto table = ap.table();
  std::vector<i64> out;
  for (i64 i = 0; i < n; ++i) {
    const i64 w = table[i];
    bool maximal = true;
    for (i64 a : s.generators().elements()) {
      if (a % n == 0) continue;
      const i64 up = checked_add(w, a);
      if (table[up % n] == up) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(w - n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> pseudo_frobenius(const NumericalSemigroup& s) { return pseudo_frobenius(s, s.apery()); }

i64 type(const NumericalSemigroup& s) { return static_cast<i64>(pseudo_frobenius(s).size()); }

GeneratorSet minimal_generators(const NumericalSemigroup& s) {
  // g is redundant iff g = a + (g - a) with a a smaller generator and g - a a
  // nonzero element of S.
  const auto gens = s.generators().elements();
  std::vector<i64> kept;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < j && !redundant; ++i) redundant = contains(s, gens[j] - gens[i]);
    if (!redundant) kept.push_back(gens[j]);
  }
  return GeneratorSet::from(kept);
}

i64 embedding_dimension(const NumericalSemigroup& s) {
  return static_cast<i64>(minimal_generators(s).size());
}

SemigroupInvariants invariants(const NumericalSemigroup& s) {
  SemigroupInvariants inv;
  inv.frobenius = frobenius_number(s);
  inv.genus = genus(s);
  if (!s.is_naturals()) inv.pseudo_frobenius = pseudo_frobenius(s);
  inv.type = static_cast<i64>(inv.pseudo_frobenius.size());
  auto msg = minimal_generators(s);
  inv.embedding_dimension = static_cast<i64>(msg.size());
  inv.minimal_generators.assign(msg.elements().begin(), msg.elements().end());
  return inv;
}

}  // namespace tupletfrob
