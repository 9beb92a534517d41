#pragma once

#include <string>
#include <vector>

#include "tupletfrob/families.hpp"
#include "tupletfrob/pattern.hpp"
#include "tupletfrob/semigroup.hpp"

namespace tupletfrob {

/// Evaluates both sides of every linear identity among the generators that
/// underpins the Apéry description of a triplet/quadruplet family (3 for T1,
/// 3 for T2, 8 for Q1, 6 for Q2). True iff all hold.
/// KBelowMinimum for k < k_min; InvalidArgument for the other families.
bool lemma_identities(FamilyId id, i64 k);

/// A term a*g_1 + b*g_2 [+ c*g_3] over the non-multiplicity generators.
struct AperyIndex {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;
};

/// The index set whose combinations form Ap(S, multiplicity). Its size
/// always equals the multiplicity (6k+5, 6k+7, 4k+5, 4k+7).
std::vector<AperyIndex> apery_index_set(FamilyId id, i64 k);

/// Ap(S, p) for S = <p + b_i> in the family, built from the index set.
AperySet apery_closed_form(FamilyId id, i64 k);

/// The Apéry set in the grouped increasing layout, blocks joined by "; ",
/// e.g. "{0; 13, 17; 26, 30, 34; 43, 47, 51; 60, 64}" for T1 at k = 1.
std::string format_apery_grouped(FamilyId id, i64 k);

/// F, g, PF, t, e and msg from the family polynomials. Q1 at k = 0,
/// i.e. <5,7,11,13>, is a tabulated special case.
SemigroupInvariants invariants_closed_form(FamilyId id, i64 k);

/// Frobenius number of <p + b_1, ..., p + b_k> from the family's quadratic
/// in p. Throws UnsupportedPattern, ResidueMismatch or KBelowMinimum.
i64 frobenius_from_p(i64 p, const OffsetPattern& pattern);

/// The tabulated type; KBelowMinimum below the family's validity threshold.
i64 type_from_family(FamilyId id, i64 k);

}  // namespace tupletfrob
