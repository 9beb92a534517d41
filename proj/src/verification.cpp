#include "tupletfrob/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "tupletfrob/closed_forms.hpp"
#include "tupletfrob/parallel.hpp"
#include "tupletfrob/primes.hpp"
#include "tupletfrob/semigroup.hpp"
#include "tupletfrob/tuplets.hpp"

namespace tupletfrob {

namespace {

std::vector<i64> checked_sorted(std::span<const i64> generators) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "no generators");
  std::vector<i64> g(generators.begin(), generators.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.front() <= 0) throw Error(Errc::NonPositiveElement, "generators must be positive");
  i64 d = 0;
  for (i64 x : g) d = std::gcd(d, x);
  if (d != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(d));
  return g;
}

}  // namespace

OracleResult oracle_frobenius(std::span<const i64> generators, bool list_gaps) {
  const auto g = checked_sorted(generators);
  OracleResult out;
  const i64 n1 = g.front();
  if (n1 == 1) return out;
  if (i128(n1) * g.back() > kOracleBound)
    throw Error(Errc::BoundExceeded, "n_1 * n_e exceeds " + std::to_string(kOracleBound));
  const i64 limit = n1 * g.back();

  std::vector<bool> reach;
  reach.push_back(true);
  i64 run = 1;
  i64 x = 1;
  for (; x <= limit && run < n1; ++x) {
    bool hit = false;
    for (i64 a : g) {
      if (a > x) break;
      if (reach[static_cast<std::size_t>(x - a)]) {
        hit = true;
        break;
      }
    }
    reach.push_back(hit);
    run = hit ? run + 1 : 0;
  }
  // reach covers [0, x); the last n1 entries are all reachable.
  out.frobenius = x - 1 - n1;
  for (i64 v = 0; v <= out.frobenius; ++v) {
    if (reach[static_cast<std::size_t>(v)]) continue;
    ++out.genus;
    if (list_gaps) out.gaps.push_back(v);
    bool pseudo = true;
    for (i64 a : g) {
      const i64 up = v + a;
      if (up <= out.frobenius && !reach[static_cast<std::size_t>(up)]) {
        pseudo = false;
        break;
      }
    }
    if (pseudo) out.pseudo_frobenius.push_back(v);
  }
  return out;
}

OracleResult shortest_path_oracle(std::span<const i64> generators) {
  const auto g = checked_sorted(generators);
  OracleResult out;
  const i64 n1 = g.front();
  if (n1 == 1) return out;
  constexpr i64 kInf = std::numeric_limits<i64>::max();
  std::vector<i64> dist(static_cast<std::size_t>(n1), kInf);
  using Item = std::pair<i64, i64>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t j = 1; j < g.size(); ++j) {
      const i64 nd = checked_add(d, g[j]);
      const i64 nr = (r + g[j]) % n1;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  auto member = [&](i64 v) { return v >= 0 && v >= dist[static_cast<std::size_t>(v % n1)]; };
  out.frobenius = *std::max_element(dist.begin(), dist.end()) - n1;
  for (i64 w : dist) {
    out.genus = checked_add(out.genus, w / n1);
    const i64 candidate = w - n1;
    if (candidate < 0) continue;
    if (std::all_of(g.begin(), g.end(), [&](i64 a) { return member(candidate + a); }))
      out.pseudo_frobenius.push_back(candidate);
  }
  std::sort(out.pseudo_frobenius.begin(), out.pseudo_frobenius.end());
  return out;
}

OracleResult reference_oracle(std::span<const i64> generators, i64 dp_limit) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "no generators");
  const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
  if (*lo > 0 && i128(*lo) * *hi <= std::min(dp_limit, kOracleBound)) return oracle_frobenius(generators, false);
  return shortest_path_oracle(generators);
}

std::size_t SweepReport::mismatch_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.match; }));
}

namespace {

SweepEntry sweep_one(const FamilyDescriptor& f, i64 k) {
  SweepEntry entry;
  entry.k = k;
  const auto gens = f.generators(k);
  const auto s = make_semigroup(gens);
  const auto oracle = reference_oracle(gens);
  const auto engine_pf = pseudo_frobenius(s);

  auto check = [&entry](std::string field, std::vector<i64> closed, std::vector<i64> engine, std::vector<i64> orc) {
    const bool ok = (closed.empty() || closed == engine) && (orc.empty() || orc == engine);
    if (!ok) entry.mismatches.push_back({std::move(field), std::move(closed), std::move(engine), std::move(orc)});
  };

  const i64 engine_f = frobenius_number(s);
  const i64 engine_g = genus(s);
  const i64 engine_t = static_cast<i64>(engine_pf.size());
  const i64 oracle_t = static_cast<i64>(oracle.pseudo_frobenius.size());

  if (f.has_apery_closed_form) {
    const auto closed = invariants_closed_form(f.id, k);
    if (k >= f.k_min) {
      const auto ap = apery_closed_form(f.id, k);
      const auto engine_ap = s.apery();
      check("apery", {ap.table().begin(), ap.table().end()}, {engine_ap.table().begin(), engine_ap.table().end()}, {});
      check("lemma_identities", {lemma_identities(f.id, k) ? 1 : 0}, {1}, {});
    }
    check("frobenius", {closed.frobenius}, {engine_f}, {oracle.frobenius});
    check("genus", {closed.genus}, {engine_g}, {oracle.genus});
    check("pseudo_frobenius", closed.pseudo_frobenius, engine_pf, oracle.pseudo_frobenius);
  } else {
    check("frobenius", {f.f_in_p.eval_integer(f.p_of(k))}, {engine_f}, {oracle.frobenius});
    check("genus", {}, {engine_g}, {oracle.genus});
    check("pseudo_frobenius", {}, engine_pf, oracle.pseudo_frobenius);
  }
  std::vector<i64> closed_type;
  if (k >= f.type_k_min) closed_type = {type_from_family(f.id, k)};
  check("type", closed_type, {engine_t}, {oracle_t});

  entry.match = entry.mismatches.empty();
  return entry;
}

}  // namespace

SweepReport sweep_family(FamilyId id, i64 k_lo, i64 k_hi, unsigned threads) {
  const auto& f = family(id);
  const i64 floor_k = id == FamilyId::Q1 ? 0 : f.k_min;
  if (k_lo < floor_k)
    throw Error(Errc::KBelowMinimum, std::string(to_string(id)) + " sweeps start at k >= " + std::to_string(floor_k));
  if (k_hi < k_lo) throw Error(Errc::InvalidArgument, "empty k range");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.family = id;
  report.k_lo = k_lo;
  report.k_hi = k_hi;
  report.entries.resize(static_cast<std::size_t>(k_hi - k_lo + 1));
  parallel_for(report.entries.size(), threads,
               [&](std::size_t i) { report.entries[i] = sweep_one(f, k_lo + static_cast<i64>(i)); });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<i64> admissible_residues(const OffsetPattern& pattern, i64 modulus) {
  std::vector<i64> factors;
  for (i64 m = modulus, q = 2; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  std::vector<i64> out;
  for (i64 r = 0; r < modulus; ++r) {
    bool ok = true;
    for (i64 q : factors)
      for (i64 b : pattern.offsets())
        if ((r + b) % q == 0) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

namespace {

// Newton form through three points, expanded to monomial coefficients.
QuadraticPoly quadratic_through(std::span<const std::pair<i64, i64>> pts) {
  const Rational x0(pts[0].first), x1(pts[1].first), x2(pts[2].first);
  const Rational y0(pts[0].second), y1(pts[1].second), y2(pts[2].second);
  const Rational d01 = (y1 - y0) / (x1 - x0);
  const Rational d12 = (y2 - y1) / (x2 - x1);
  const Rational d012 = (d12 - d01) / (x2 - x0);
  return {d012, d01 - d012 * (x0 + x1), y0 - d01 * x0 + d012 * x0 * x1};
}

}  // namespace

ConjectureFit fit_conjecture(const ConjectureQuery& query) {
  if (query.modulus <= 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  ConjectureFit fit{query.pattern, query.modulus, mod_floor(query.residue, query.modulus), {}, {}, false, false, false, {}};

  std::vector<i64> ps;
  if (query.primes_only) {
    TupletSearch search;
    search.lo = std::max<i64>(query.min_p, 2);
    search.hi = query.max_p;
    search.require_consecutive = false;
    search.threads = query.threads;
    if (search.lo <= search.hi)
      for (const auto& t : find_tuplets(query.pattern, search))
        if (mod_floor(t.p, fit.modulus) == fit.residue) ps.push_back(t.p);
  } else {
    i64 p = std::max<i64>(query.min_p, 2);
    p += mod_floor(fit.residue - p, fit.modulus);
    for (; p <= query.max_p; p += fit.modulus) {
      i64 d = 0;
      for (i64 b : query.pattern.offsets()) d = std::gcd(d, p + b);
      if (d == 1) ps.push_back(p);
    }
  }
  if (ps.size() < 4)
    throw Error(Errc::InsufficientSamples, "only " + std::to_string(ps.size()) + " sample(s) in the residue class");

  fit.samples.resize(ps.size());
  parallel_for(ps.size(), query.threads, [&](std::size_t i) {
    std::vector<i64> gens;
    for (i64 b : query.pattern.offsets()) gens.push_back(ps[i] + b);
    fit.samples[i] = {ps[i], frobenius_number(make_semigroup(gens))};
  });

  fit.fit = quadratic_through(fit.samples);
  for (std::size_t i = 3; i < fit.samples.size(); ++i) {
    const auto [p, value] = fit.samples[i];
    if (fit.fit(Rational(p)) != Rational(value)) fit.residual_failures.push_back(p);
  }
  fit.exact = fit.residual_failures.empty();
  fit.a2_equals_2_over_q = fit.fit.a2 == Rational(2, query.pattern.diameter());
  fit.a0_integer = fit.fit.a0.is_integer();
  return fit;
}

ConjectureFit fit_family(FamilyId id, i64 max_p, unsigned threads) {
  const auto& f = family(id);
  ConjectureQuery q{f.pattern};
  q.modulus = f.p_modulus;
  q.residue = f.p_residue;
  q.min_p = f.p_of(f.k_min);
  q.max_p = max_p;
  q.threads = threads;
  return fit_conjecture(q);
}

i64 default_conjecture_modulus(const OffsetPattern& pattern) {
  i64 modulus = 1;
  for (i64 q = 2; q <= static_cast<i64>(pattern.size()); ++q)
    if (is_prime(static_cast<std::uint64_t>(q))) modulus *= q;
  return std::lcm(modulus, std::max<i64>(pattern.diameter() / 2, 1));
}

std::vector<ConjectureFit> fit_pattern(const OffsetPattern& pattern, i64 max_p, bool primes_only, unsigned threads) {
  std::vector<ConjectureQuery> queries;
  const auto registered = families_for(pattern);
  if (!registered.empty()) {
    for (const auto* f : registered) {
      ConjectureQuery q{f->pattern};
      q.modulus = f->p_modulus;
      q.residue = f->p_residue;
      q.min_p = f->p_of(f->k_min);
      queries.push_back(q);
    }
  } else {
    const i64 modulus = default_conjecture_modulus(pattern);
    for (i64 r : admissible_residues(pattern, modulus)) {
      ConjectureQuery q{pattern};
      q.modulus = modulus;
      q.residue = r;
      queries.push_back(q);
    }
  }
  std::vector<ConjectureFit> fits;
  for (auto& q : queries) {
    q.max_p = max_p;
    q.primes_only = primes_only;
    q.threads = threads;
    try {
      fits.push_back(fit_conjecture(q));
    } catch (const Error& e) {
      if (e.code() != Errc::InsufficientSamples) throw;
    }
  }
  if (fits.empty()) throw Error(Errc::InsufficientSamples, "no residue class of " + pattern.str() + " has four samples");
  return fits;
}

}  // namespace tupletfrob
