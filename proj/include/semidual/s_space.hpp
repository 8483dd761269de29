#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidual/report.hpp"
#include "semidual/semilattice.hpp"
#include "semidual/subset.hpp"

namespace semidual {

/// Finite space given by a subbase K of open sets.
///
/// The constructor closes K under finite unions and adjoins the empty set,
/// so `subbase()` is the family written K throughout.  Points are indexed
/// 0..size()-1.  All derived families are computed once and are read-only
/// afterwards.
class SSpace {
 public:
  SSpace() = default;
  SSpace(std::size_t points, Family subbase, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  Subset universe() const { return Subset::full(n_); }
  std::vector<std::string> const& labels() const { return labels_; }

  /// K, canonical.
  Family const& subbase() const { return k_; }
  /// S(X) = {U^c : U in K}, canonical.
  Family const& s_sets() const { return s_; }
  /// C_K(X): intersections of subfamilies of S(X), including X itself.
  Family const& subbasic_closed() const { return ck_; }
  /// Finite intersections of subbase members together with X.
  Family const& basis() const { return basis_; }
  /// Every open set (unions of basis members), canonical.
  Family opens() const;

  bool is_open(Subset u) const;
  Subset closure(Subset s) const;
  /// Least open set containing `s`; opens are up-closed for the
  /// specialization order, so this is the saturation of `s`.
  Subset saturation(Subset s) const;
  bool is_saturated(Subset s) const { return saturation(s) == s; }
  /// Finite subsets of a finite space are compact; this only checks that `s`
  /// lies in the space.
  bool is_compact(Subset s) const { return s.subset_of(universe()); }

  /// x is in the closure of {y}.
  bool specializes(std::size_t x, std::size_t y) const { return cl_point_[y].contains(x); }
  /// Points in the closure of {y}.
  Subset point_closure(std::size_t y) const { return cl_point_[y]; }

 private:
  std::size_t n_ = 0;
  Family k_;
  Family s_;
  Family ck_;
  Family basis_;
  std::vector<Subset> cl_point_;
  std::vector<std::string> labels_;
};

bool is_dually_directed(Family const& family);
bool is_directed_family(Family const& family);

struct YFamilyEntry {
  Subset a, b, h, c;
};

/// Result of the Y-family test.  On success every pair (A, B) of the family
/// carries its (H, C); on failure `counter` names a pair with no witness.
struct YFamilyWitness {
  bool holds = true;
  std::vector<YFamilyEntry> entries;
  std::optional<std::pair<Subset, Subset>> counter;
};

/// Throws YNotClosed when Y is not subbasic closed and NotInSX when a member
/// of J is not in S(X).
YFamilyWitness is_Y_family(SSpace const& x, Subset y, Family const& j);

struct SSpaceCheckOptions {
  std::size_t s4_cap = 12;        // exhaustive S4 when |S(X)| <= cap
  std::uint64_t seed = 0;         // sampling seed above the cap
  std::size_t s4_samples = 4096;  // sampled subfamilies above the cap
};

/// One check per axiom, S1..S4.  Above the cap the S4 check is sampled and
/// its name carries the suffix "(partial)".
Report check_s_space(SSpace const& x, SSpaceCheckOptions const& options = {});

/// Z(X): intersections of nonempty dually directed subfamilies of K.
/// Throws CapExceeded for |K| > 16.
Family subbasic_saturated(SSpace const& x);

/// The dual S-space of a semilattice together with the maps relating both.
struct DualSpace {
  Semilattice algebra;
  Family points;             // X(A), canonical; point i is points[i]
  std::vector<Subset> beta;  // beta[a] = {i : a in points[i]}
  SSpace space;
};

DualSpace dual_space(Semilattice const& s);

/// {P : F <= P}.
Subset phi(DualSpace const& d, Subset filter);
/// {a : Y <= beta(a)}.
Subset psi(DualSpace const& d, Subset y);

/// S(X) as a semilattice under intersection with top X.  Element k is
/// `sets[k]`, in canonical order.
struct DualAlgebra {
  Semilattice algebra;
  Family sets;
};

DualAlgebra dual_semilattice(SSpace const& x);

/// x |-> {A in S(X) : x in A}, landing in the dual space of S(X).
struct HomeomorphismData {
  DualAlgebra algebra;
  DualSpace codomain;
  std::vector<std::size_t> map;  // point index in codomain
};

/// Throws NotAnSSpace when check_s_space fails.
HomeomorphismData H_X(SSpace const& x, SSpaceCheckOptions const& options = {});

/// Bijective, and carries K onto the codomain's K.
bool is_homeomorphism(SSpace const& a, SSpace const& b, std::vector<std::size_t> const& map);

/// Exhaustive checks of the duality facts relating S and its dual space.
Report s_space_laws(Semilattice const& s, SSpaceCheckOptions const& options = {});

/// Graphviz digraph of the specialization order (edges x -> y when x is
/// strictly below y in the closure sense, covers only).
std::string specialization_dot(SSpace const& x);
/// Graphviz bipartite membership graph a -- P for P in beta(a).
std::string beta_dot(DualSpace const& d);

}  // namespace semidual
