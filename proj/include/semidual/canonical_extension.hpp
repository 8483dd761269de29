#pragma once

#include <cstddef>
#include <vector>

#include "semidual/report.hpp"
#include "semidual/s_space.hpp"

namespace semidual {

/// {P : P misses I}.  Throws NotAnIdeal unless I is an order-ideal.
Subset alpha(DualSpace const& d, Subset ideal);
/// I_A(Z) = {a : beta(a) misses Z}.  Throws NotSaturated unless Z is a
/// subbasic saturated set of the dual space.
Subset ideal_of(DualSpace const& d, Subset z);

/// Upsets of the poset of points ordered by inclusion of filters.
bool is_point_upset(DualSpace const& d, Subset y);

/// The closure system E(X(A)) of intersections of complements of subbasic
/// saturated sets, with the embedding a |-> beta(a).
struct CanonicalExtension {
  DualSpace dual;
  Family saturated;  // Z(X(A)), canonical
  Family elements;   // E, canonical; contains X(A)

  bool contains(Subset v) const { return family_has(elements, v); }
  Subset embed(Element a) const { return dual.beta[a]; }
  /// Meet is intersection; X(A) for the empty family.
  Subset meet(Family const& family) const;
  /// Least member of `elements` containing the union.  On E this is the
  /// lambda closure of the union.
  Subset join(Family const& family) const;
};

/// Intersection of the complements of subbasic saturated sets above Y.
/// Throws NotAnUpset unless Y is an upset of points.
Subset lambda_closure(CanonicalExtension const& ce, Subset y);

CanonicalExtension build_extension(Semilattice const& s);

struct ClosedOpen {
  Family closed;  // meets of beta-images of filters
  Family open;    // joins of beta-images of order-ideals
};

ClosedOpen closed_open_elements(CanonicalExtension const& ce);

/// Both verifiers work on any candidate `elements` family (for instance a
/// corrupted copy); meets and joins are taken inside that family.
Report verify_dense(CanonicalExtension const& ce);
Report verify_compact(CanonicalExtension const& ce);

/// The iterated filter completion of Gouveia and Priestley, with the maps i
/// and j relating its subset C to E(X(A)).  Families of filters are subsets
/// of indices into `filters`.
struct GouveiaPriestley {
  Family filters;             // Fi(A), canonical
  Family second_filters;      // Fi(Fi(A))
  std::vector<Subset> e;      // e(a) = {F : a in F}
  Family c;                   // meets of directed joins of e-images of ideals
  std::vector<Subset> i_of_c; // i applied to each member of c
  Report report;
};

/// Throws CapExceeded when |Fi(A)| exceeds `max_filters` (at most 64).
GouveiaPriestley gouveia_priestley(Semilattice const& s, std::size_t max_filters = 32);

/// Exhaustive checks of the extension facts on one semilattice.
Report canonical_extension_laws(Semilattice const& s);

}  // namespace semidual
