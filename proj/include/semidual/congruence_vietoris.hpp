#pragma once

#include <string>
#include <vector>

#include "semidual/monotone_duality.hpp"

namespace semidual {

/// For each x and U in S(X1) missing x, some V in S(X2) has U inside
/// Box_T(V) and x outside it.
bool is_one_to_one(MeetRelation const& t);
/// Box_T maps S(X2) onto S(X1).
bool box_is_onto(MeetRelation const& t);

/// A family F of nonempty subbasic closed sets of `base`, with the space
/// <F, M_F> whose points are the members (in canonical order) and whose
/// subbase is M_F = {U^-_F : U in K}.
struct VietorisFamily {
  SSpace base;
  Family members;
  SSpace space;
};

/// U^-_F = {Y in F : Y meets U}, as a set of member indices.
Subset lower_set(Family const& members, Subset u);

/// Throws NotAVietorisFamily when a member is empty or not in C_K(base).
VietorisFamily make_family(SSpace base, Family members);

/// S-space axioms of <F, M_F>.
Report check_vietoris_family(VietorisFamily const& f, SSpaceCheckOptions const& options = {});
/// Adds, over the dual space of a semilattice, that the subbasic closed
/// sets of <F, M_F> are exactly {Y in F : Y inside phi(G)} for filters G.
Report check_vietoris_family(DualSpace const& d, VietorisFamily const& f);
bool is_vietoris_family(VietorisFamily const& f);

/// F_T = {T(x)}.  Throws NotOneToOne unless T is one-to-one.
VietorisFamily family_of_relation(MeetRelation const& t);
/// H_a = {Y in F : Y meets beta(a)^c}, as member indices.
Subset H_a(DualSpace const& d, Family const& members, Element a);

/// R_F from <F, M_F> to the base: (Y, P) in R_F iff P in Y.  Throws
/// NotAVietorisFamily unless the family passes the check.
MeetRelation relation_of_family(VietorisFamily const& f);

/// (a, b) in theta_F iff [beta(a)^c]^-_F = [beta(b)^c]^-_F.  Throws
/// NotAVietorisFamily unless the family passes the check.
Congruence theta_of_family(DualSpace const& d, VietorisFamily const& f);
/// F_{R_q} for the projection q onto A/theta.  Throws NotACongruence.
VietorisFamily family_of_theta(Semilattice const& s, Congruence const& theta, ElementMap const* op = nullptr);

/// Partition brute force filtered by compatibility.
std::vector<Congruence> all_congruences(Semilattice const& s, ElementMap const* op = nullptr);

/// [H cap K)_F = H cap K, with H a subset of Z(X).
bool is_M_increasing(SSpace const& base, Family const& members, Family const& h);
/// Report form of the monotone condition: R[Y] is M_F-increasing for every
/// Y in F.  The witness names Y and the pair (U, V) of subbase members.
Report monotone_family_check(MSSpace const& x, VietorisFamily const& f);
/// Throws NotMIncreasing with the witnessing subbase indices (U, V).
void require_monotone_family(MSSpace const& x, VietorisFamily const& f);

/// On <F, M_F>: (Y, Z) in R iff Z meets every H_a^c with beta(a)^c outside
/// R_m[Y].
MSSpace induced_multirelation(MonotoneDual const& d, VietorisFamily const& f);

/// V(X) (or V_m(X)) materialized by exhaustive search over families of
/// nonempty members of C_K(X).
struct VietorisLattice {
  std::vector<Family> families;            // canonical order of families
  std::vector<std::vector<bool>> leq;      // the kernel-comparison order
  std::vector<Congruence> thetas;          // theta_F on S(X), same order
  DualAlgebra algebra;                     // S(X)
  Report report;                           // lattice and dual-isomorphism checks
};

/// Throws CapExceeded when C_K(X) has more than `max_members` nonempty sets.
VietorisLattice vietoris_lattice(SSpace const& x, std::size_t max_members = 14);
VietorisLattice vietoris_lattice(MSSpace const& x, std::size_t max_members = 14);

/// For an onto monotone homomorphism h: <A, m> -> <B, n>, lambda(P) = R_h(P)
/// carries R_n onto T, <F_{R_h}, M, T> is an mS-space, and
/// beta(a)^c in R_m[R_h(P)] iff H_a in T(R_h(P)).
Report induced_homeomorphism_check(Homomorphism const& h, ElementMap const& m, ElementMap const& n);

/// Filters closed under theta, and the congruence of a family of filters.
Family sigma_of(Semilattice const& s, Congruence const& theta);
Congruence rho_of(Semilattice const& s, Family const& filters);
/// Families of filters containing A and closed under intersection.
std::vector<Family> algebraic_subsets(Semilattice const& s, std::size_t max_filters = 16);

/// sigma and rho are inverse order-reversing bijections between Con(A) and
/// S_p(Fi(A)), together with the filter families of the quotients.
Report fajtlowicz_schmidt(Semilattice const& s);

/// Exhaustive congruence correspondences on one semilattice (with `op`, the
/// monotone ones).
Report congruence_laws(Semilattice const& s, ElementMap const* op = nullptr);

}  // namespace semidual
