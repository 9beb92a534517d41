#include "tupletfrob/tuplets.hpp"

#include <algorithm>
#include <string>

#include "tupletfrob/parallel.hpp"
#include "tupletfrob/primes.hpp"

namespace tupletfrob {

namespace {

constexpr i64 kSegment = i64{1} << 18;

std::vector<i64> small_primes_through(i64 limit) {
  std::vector<i64> out;
  for (i64 q = 2; q <= limit; ++q)
    if (is_prime(static_cast<std::uint64_t>(q))) out.push_back(q);
  return out;
}

// Bitmask admissibility used by the exhaustive search; bit r of the mask
// marks residue r as covered.
bool admissible_offsets(std::span<const i64> offsets, std::span<const i64> primes) {
  for (i64 q : primes) {
    std::uint64_t covered = 0;
    for (i64 b : offsets) covered |= std::uint64_t{1} << (b % q);
    if (covered == (std::uint64_t{1} << q) - 1) return false;
  }
  return true;
}

}  // namespace

AdmissibilityReport is_admissible(const OffsetPattern& pattern) {
  AdmissibilityReport report;
  for (i64 q : small_primes_through(static_cast<i64>(pattern.size()))) {
    std::vector<i64> residues;
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    for (i64 b : pattern.offsets()) {
      residues.push_back(b % q);
      seen[static_cast<std::size_t>(b % q)] = true;
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
      report.admissible = false;
      report.witness_prime = q;
      report.residues_at_witness = std::move(residues);
      return report;
    }
  }
  return report;
}

SmallestDiameter smallest_diameter(int k) {
  if (k < 2 || k > 10) throw Error(Errc::KTooLarge, "k must lie in [2, 10], got " + std::to_string(k));
  const auto primes = small_primes_through(k);
  for (i64 d = k - 1;; ++d) {
    SmallestDiameter found{d, {}};
    // Interior offsets: combinations of k-2 values from {1, ..., d-1} in
    // lexicographic order.
    const int inner = k - 2;
    std::vector<i64> offsets(static_cast<std::size_t>(k));
    offsets.front() = 0;
    offsets.back() = d;
    std::vector<i64> pick(static_cast<std::size_t>(inner));
    for (int i = 0; i < inner; ++i) pick[i] = i + 1;
    while (true) {
      std::copy(pick.begin(), pick.end(), offsets.begin() + 1);
      if (admissible_offsets(offsets, primes)) found.patterns.push_back(OffsetPattern::from(offsets));
      int i = inner - 1;
      while (i >= 0 && pick[i] == d - inner + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < inner; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found.patterns.empty()) return found;
  }
}

std::vector<PrimeTuplet> find_tuplets(const OffsetPattern& pattern, const TupletSearch& search) {
  if (search.lo < 0 || search.lo > search.hi)
    throw Error(Errc::InvalidArgument, "search range must satisfy 0 <= lo <= hi");
  if (!search.allow_inadmissible) {
    auto report = is_admissible(pattern);
    if (!report.admissible)
      throw Error(Errc::NotAdmissible,
                  "pattern " + pattern.str() + " covers every residue mod " + std::to_string(*report.witness_prime));
  }
  const i64 d = pattern.diameter();
  const i64 top = checked_add(search.hi, d);
  const auto base = primes_up_to(isqrt(static_cast<std::uint64_t>(top)) + 1);
  const i64 span = search.hi - search.lo + 1;
  const auto segments = static_cast<std::size_t>((span + kSegment - 1) / kSegment);
  std::vector<std::vector<PrimeTuplet>> found(segments);

  parallel_for(segments, search.threads, [&](std::size_t s) {
    const i64 seg_lo = search.lo + static_cast<i64>(s) * kSegment;
    const i64 seg_hi = std::min(search.hi, seg_lo + kSegment - 1);
    const auto flags = sieve_interval(static_cast<std::uint64_t>(seg_lo), static_cast<std::uint64_t>(seg_hi + d), base);
    auto prime_at = [&](i64 v) { return flags[static_cast<std::size_t>(v - seg_lo)] != 0; };
    for (i64 p = seg_lo; p <= seg_hi; ++p) {
      if (!prime_at(p)) continue;
      bool ok = std::all_of(pattern.offsets().begin(), pattern.offsets().end(),
                            [&](i64 b) { return prime_at(p + b); });
      if (ok && search.require_consecutive) {
        auto offs = pattern.offsets();
        for (i64 v = p + 1; v < p + d && ok; ++v)
          if (prime_at(v) && !std::binary_search(offs.begin(), offs.end(), v - p)) ok = false;
      }
      if (!ok) continue;
      PrimeTuplet t{p, pattern, {}};
      for (i64 b : pattern.offsets()) t.primes.push_back(p + b);
      found[s].push_back(std::move(t));
    }
  });

  std::vector<PrimeTuplet> out;
  for (auto& chunk : found)
    for (auto& t : chunk) out.push_back(std::move(t));
  return out;
}

std::vector<PrimeTuplet> find_tuplets(const OffsetPattern& pattern, i64 lo, i64 hi, bool require_consecutive) {
  TupletSearch search;
  search.lo = lo;
  search.hi = hi;
  search.require_consecutive = require_consecutive;
  return find_tuplets(pattern, search);
}

Classification classify(i64 p, const OffsetPattern& pattern) {
  const auto candidates = families_for(pattern);
  if (candidates.empty()) throw Error(Errc::UnsupportedPattern, "no family is registered for pattern " + pattern.str());
  for (const auto* f : candidates) {
    if (mod_floor(p - f->p_residue, f->p_modulus) != 0) continue;
    if (p < f->p_residue) break;
    return {f->id, (p - f->p_residue) / f->p_modulus};
  }
  std::string classes;
  for (const auto* f : candidates)
    classes += (classes.empty() ? "" : ", ") + std::to_string(f->p_modulus) + "k+" + std::to_string(f->p_residue);
  throw Error(Errc::ResidueMismatch,
              "p = " + std::to_string(p) + " is not of the form " + classes + " with k >= 0 for pattern " + pattern.str());
}

Classification classify(const PrimeTuplet& tuplet) {
  const auto offs = tuplet.pattern.offsets();
  if (tuplet.primes.size() != offs.size())
    throw Error(Errc::InvalidArgument, "tuplet primes do not match its pattern");
  for (std::size_t i = 0; i < offs.size(); ++i)
    if (tuplet.primes[i] != tuplet.p + offs[i]) throw Error(Errc::InvalidArgument, "tuplet primes do not match its pattern");
  auto c = classify(tuplet.p, tuplet.pattern);
  if (c.family == FamilyId::Q1 || c.family == FamilyId::Q2) {
    const i64 r = mod_floor(tuplet.p, 12);
    if (r != 5 && r != 11)
      throw Error(Errc::ResidueMismatch, "quadruplet start " + std::to_string(tuplet.p) + " is not 5 or 11 mod 12");
  }
  return c;
}

}  // namespace tupletfrob
