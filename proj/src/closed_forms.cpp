#include "tupletfrob/closed_forms.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tupletfrob/tuplets.hpp"

namespace tupletfrob {

namespace {

void require_k(const FamilyDescriptor& f, i64 k, i64 minimum) {
  if (k < minimum)
    throw Error(Errc::KBelowMinimum, std::string(to_string(f.id)) + " requires k >= " + std::to_string(minimum) +
                                         ", got " + std::to_string(k));
}

const FamilyDescriptor& apery_family(FamilyId id) {
  const auto& f = family(id);
  if (!f.has_apery_closed_form)
    throw Error(Errc::InvalidArgument, std::string(to_string(id)) + " has no closed-form Apéry set");
  return f;
}

struct Side {
  i64 coeff;
  i64 gen;
};

i64 eval(std::initializer_list<Side> terms) {
  i64 total = 0;
  for (auto t : terms) total = checked_add(total, checked_mul(t.coeff, t.gen));
  return total;
}

// Generators n_1 < n_2 < ... of the family at k, as a vector.
std::vector<i64> gens(const FamilyDescriptor& f, i64 k) { return f.generators(k); }

}  // namespace

bool lemma_identities(FamilyId id, i64 k) {
  const auto& f = apery_family(id);
  require_k(f, k, f.k_min);
  const auto g = gens(f, k);
  std::vector<std::pair<i64, i64>> sides;
  auto eq = [&sides](std::initializer_list<Side> lhs, std::initializer_list<Side> rhs) {
    sides.emplace_back(eval(lhs), eval(rhs));
  };
  switch (id) {
    case FamilyId::T1: {  // 6k+5, 6k+7, 6k+11
      const i64 x = g[0], y = g[1], z = g[2];
      eq({{3, y}}, {{2, x}, {1, z}});
      eq({{2 * k + 2, z}}, {{2 * k + 3, x}, {1, y}});
      eq({{2, y}, {2 * k + 1, z}}, {{2 * k + 5, x}});
      break;
    }
    case FamilyId::T2: {  // 6k+7, 6k+11, 6k+13
      const i64 x = g[0], y = g[1], z = g[2];
      eq({{3, y}}, {{1, x}, {2, z}});
      eq({{2 * k + 3, z}}, {{2 * k + 4, x}, {1, y}});
      eq({{2, y}, {2 * k + 1, z}}, {{2 * k + 5, x}});
      break;
    }
    case FamilyId::Q1: {  // 4k+5, 4k+7, 4k+11, 4k+13
      const i64 w = g[0], x = g[1], y = g[2], z = g[3];
      eq({{3, x}}, {{2, w}, {1, y}});
      eq({{3, y}}, {{1, x}, {2, z}});
      eq({{k + 2, z}}, {{k + 3, w}, {1, y}});
      eq({{1, x}, {1, y}}, {{1, w}, {1, z}});
      eq({{1, x}, {k + 1, z}}, {{k + 4, w}});
      eq({{2, x}, {1, z}}, {{1, w}, {2, y}});
      eq({{1, y}, {k + 1, z}}, {{k + 2, w}, {2, x}});
      eq({{2, y}, {k, z}}, {{k + 3, w}, {1, x}});
      break;
    }
    case FamilyId::Q2: {  // 4k+7, 4k+9, 4k+13, 4k+15
      const i64 w = g[0], x = g[1], y = g[2], z = g[3];
      eq({{3, x}}, {{2, w}, {1, y}});
      eq({{3, y}}, {{1, x}, {2, z}});
      eq({{k + 2, z}}, {{k + 3, w}, {1, x}});
      eq({{1, x}, {1, y}}, {{1, w}, {1, z}});
      eq({{2, x}, {1, z}}, {{1, w}, {2, y}});
      eq({{1, y}, {k + 1, z}}, {{k + 4, w}});
      break;
    }
    default:
      break;
  }
  return std::all_of(sides.begin(), sides.end(), [](const auto& s) { return s.first == s.second; });
}

std::vector<AperyIndex> apery_index_set(FamilyId id, i64 k) {
  const auto& f = apery_family(id);
  require_k(f, k, f.k_min);
  std::vector<AperyIndex> c;
  c.reserve(static_cast<std::size_t>(f.p_of(k)));
  switch (id) {
    case FamilyId::T1:  // {0,1,2} x {0..2k+1} minus (2, 2k+1)
      for (i64 a = 0; a <= 2; ++a)
        for (i64 b = 0; b <= 2 * k + 1; ++b)
          if (!(a == 2 && b == 2 * k + 1)) c.push_back({a, b, 0});
      break;
    case FamilyId::T2:  // {0,1,2} x {0..2k+2} minus (2, 2k+1), (2, 2k+2)
      for (i64 a = 0; a <= 2; ++a)
        for (i64 b = 0; b <= 2 * k + 2; ++b)
          if (!(a == 2 && b >= 2 * k + 1)) c.push_back({a, b, 0});
      break;
    case FamilyId::Q1:
      for (i64 t = 0; t <= k; ++t) c.push_back({1, 0, t});
      c.push_back({2, 0, 0});
      for (i64 b = 1; b <= 2; ++b)
        for (i64 t = 0; t <= k; ++t)
          if (!(b == 2 && t == k)) c.push_back({0, b, t});
      for (i64 t = 0; t <= k + 1; ++t) c.push_back({0, 0, t});
      break;
    case FamilyId::Q2:
      for (i64 t = 0; t <= k + 1; ++t) c.push_back({1, 0, t});
      c.push_back({2, 0, 0});
      for (i64 b = 1; b <= 2; ++b)
        for (i64 t = 0; t <= k; ++t) c.push_back({0, b, t});
      for (i64 t = 0; t <= k + 1; ++t) c.push_back({0, 0, t});
      break;
    default:
      break;
  }
  return c;
}

AperySet apery_closed_form(FamilyId id, i64 k) {
  const auto& f = apery_family(id);
  const auto index = apery_index_set(id, k);
  const auto g = gens(f, k);
  const i64 n = g[0];
  if (static_cast<i64>(index.size()) != n)
    throw std::logic_error("index set size " + std::to_string(index.size()) + " differs from modulus " + std::to_string(n));
  constexpr i64 kEmpty = std::numeric_limits<i64>::min();
  std::vector<i64> table(static_cast<std::size_t>(n), kEmpty);
  for (const auto& [a, b, c] : index) {
    const i64 value = g.size() == 3 ? eval({{a, g[1]}, {b, g[2]}})
                                    : eval({{a, g[1]}, {b, g[2]}, {c, g[3]}});
    auto& slot = table[static_cast<std::size_t>(value % n)];
    if (slot != kEmpty) throw std::logic_error("two Apéry candidates share residue " + std::to_string(value % n));
    slot = value;
  }
  return AperySet(n, std::move(table));
}

std::string format_apery_grouped(FamilyId id, i64 k) {
  const auto& f = apery_family(id);
  require_k(f, k, f.k_min);
  const auto g = gens(f, k);
  std::vector<std::vector<i64>> blocks{{0}};
  switch (id) {
    case FamilyId::T1: {
      const i64 z = g[2];
      blocks.push_back({g[1], z});
      for (i64 j = 2; j <= 2 * k + 1; ++j) blocks.push_back({j * z - 8, j * z - 4, j * z});
      blocks.push_back({(2 * k + 2) * z - 8, (2 * k + 2) * z - 4});
      break;
    }
    case FamilyId::T2: {
      const i64 z = g[2];
      blocks.push_back({g[1], z});
      for (i64 j = 2; j <= 2 * k + 2; ++j) blocks.push_back({j * z - 4, j * z - 2, j * z});
      blocks.push_back({(2 * k + 3) * z - 2});
      break;
    }
    case FamilyId::Q1:
    case FamilyId::Q2: {
      const i64 z = g[3];
      blocks.push_back({g[1], g[2], z});
      blocks.push_back({2 * g[1]});
      for (i64 j = 2; j <= k + 1; ++j) blocks.push_back({j * z - 6, j * z - 4, j * z - 2, j * z});
      if (id == FamilyId::Q2) blocks.push_back({(k + 2) * z - 6, (k + 2) * z - 4});
      break;
    }
    default:
      break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(blocks[i][j]);
    }
  }
  return out + "}";
}

SemigroupInvariants invariants_closed_form(FamilyId id, i64 k) {
  const auto& f = apery_family(id);
  SemigroupInvariants inv;
  const auto g = gens(f, std::max<i64>(k, 0));
  if (id == FamilyId::Q1 && k == 0) {
    // <5,7,11,13>: Ap(S,5) = {0,7,11,13,14}, so F = 14 - 5 = 9 = max PF.
    inv.pseudo_frobenius = {6, 8, 9};
    inv.frobenius = 9;
    inv.genus = 7;
  } else {
    require_k(f, k, f.k_min);
    for (const auto& poly : f.pf_in_k) inv.pseudo_frobenius.push_back(poly(k));
    std::sort(inv.pseudo_frobenius.begin(), inv.pseudo_frobenius.end());
    inv.frobenius = (*f.f_in_k)(k);
    inv.genus = (*f.g_in_k)(k);
  }
  inv.type = static_cast<i64>(inv.pseudo_frobenius.size());
  inv.minimal_generators = g;
  inv.embedding_dimension = static_cast<i64>(g.size());
  return inv;
}

i64 frobenius_from_p(i64 p, const OffsetPattern& pattern) {
  const auto c = classify(p, pattern);
  const auto& f = family(c.family);
  require_k(f, c.k, f.k_min);
  return f.f_in_p.eval_integer(p);
}

i64 type_from_family(FamilyId id, i64 k) {
  const auto& f = family(id);
  require_k(f, k, f.type_k_min);
  return *f.type_value;
}

}  // namespace tupletfrob
