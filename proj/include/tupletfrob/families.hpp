#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tupletfrob/arith.hpp"
#include "tupletfrob/pattern.hpp"

namespace tupletfrob {

enum class FamilyId { T1, T2, Q1, Q2, Quin1, Quin2, Sex7, Sex37, Sex67, Sex97, Sep1, Sep2 };

std::string_view to_string(FamilyId id) noexcept;
/// Throws InvalidArgument for unknown names.
FamilyId parse_family_id(std::string_view name);

/// Integer quadratic c2 k^2 + c1 k + c0.
struct KPoly {
  i64 c2 = 0;
  i64 c1 = 0;
  i64 c0 = 0;

  i64 operator()(i64 k) const { return checked_add(checked_add(checked_mul(checked_mul(c2, k), k), checked_mul(c1, k)), c0); }
  friend bool operator==(const KPoly&, const KPoly&) = default;
};

/// a2 p^2 + a1 p + a0 with exact rational coefficients.
struct QuadraticPoly {
  Rational a2;
  Rational a1;
  Rational a0;

  Rational operator()(const Rational& x) const { return (a2 * x + a1) * x + a0; }
  /// Value at integer p; throws InvalidArgument if it is not an integer.
  i64 eval_integer(i64 p) const;
  /// The polynomial in k obtained by substituting p = modulus * k + residue.
  QuadraticPoly compose_linear(i64 modulus, i64 residue) const;
  std::string str() const;

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;
};

/// One parametric family of semigroups <p + b_1, ..., p + b_k> with
/// p = p_modulus * k + p_residue.
struct FamilyDescriptor {
  FamilyId id;
  OffsetPattern pattern;
  i64 p_modulus;
  i64 p_residue;
  i64 k_min;  // first k where the closed forms hold
  QuadraticPoly f_in_p;
  std::optional<i64> type_value;
  i64 type_k_min;
  // Polynomials in k; present for the triplet and quadruplet families.
  std::optional<KPoly> f_in_k;
  std::optional<KPoly> g_in_k;
  std::vector<KPoly> pf_in_k;
  bool has_apery_closed_form = false;

  i64 p_of(i64 k) const { return checked_add(checked_mul(p_modulus, k), p_residue); }
  std::vector<i64> generators(i64 k) const;
};

/// The built-in table: triplets through septuplets, ordered by FamilyId.
std::span<const FamilyDescriptor> family_registry();
const FamilyDescriptor& family(FamilyId id);
/// Every registered family whose offset pattern equals `pattern`.
std::vector<const FamilyDescriptor*> families_for(const OffsetPattern& pattern);

}  // namespace tupletfrob
