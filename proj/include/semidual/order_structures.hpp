#pragma once

#include "semidual/report.hpp"
#include "semidual/semilattice.hpp"
#include "semidual/subset.hpp"

namespace semidual {

bool is_upset(Semilattice const& s, Subset x);
bool is_downset(Semilattice const& s, Subset x);
/// Upset containing the top and closed under meet.
bool is_filter(Semilattice const& s, Subset x);
/// Every pair has an upper bound inside `x`.
bool is_directed(Semilattice const& s, Subset x);
/// Nonempty directed downset.
bool is_order_ideal(Semilattice const& s, Subset x);

/// Least filter containing `x`; {top} for the empty set.
Subset generated_filter(Semilattice const& s, Subset x);
/// Fi(S), canonical order.
Family all_filters(Semilattice const& s);

/// Proper filter that is not the intersection of two strictly larger
/// filters.  False for non-filters.
bool is_irreducible(Semilattice const& s, Subset f);
/// X(S), canonical order.
Family irreducible_filters(Semilattice const& s);

/// For all a, b outside F there are c outside F and f in F with
/// a^f <= c and b^f <= c.  Throws NotProper when F is the whole carrier and
/// BadShape when F is not a filter.
bool is_irreducible_char(Semilattice const& s, Subset f);

/// Id(S) by directed-downset search, canonical order.
Family all_order_ideals(Semilattice const& s);
/// {(a] : a in S}, canonical order.
Family principal_downsets(Semilattice const& s);

/// Downset I such that any a, b in I satisfy a^f <= c and b^f <= c for some
/// c in I, f in F.  Throws NotADownset.
bool is_F_ideal(Semilattice const& s, Subset f, Subset i);

/// Least irreducible filter (canonical order) containing F and missing I.
/// I must be a nonempty order-ideal or F-ideal.  Throws NotDisjoint when F
/// meets I and NotAnIdeal when I is neither.
Subset separate(Semilattice const& s, Subset f, Subset i);

/// Exhaustive checks of the filter and ideal facts on one semilattice.
Report order_structure_laws(Semilattice const& s);

}  // namespace semidual
