#pragma once

#include <string>
#include <vector>

#include "semidual/report.hpp"
#include "semidual/s_space.hpp"

namespace semidual {

/// R, a subset of X x Z(X), stored as R(x) for each point.
struct MultiRelation {
  std::vector<Family> of_point;  // each canonical, members in Z(X)

  friend bool operator==(MultiRelation const&, MultiRelation const&) = default;
};

/// S-space with a multirelation.  The two defining conditions are checked by
/// `check_ms_space`, not on construction.
struct MSSpace {
  SSpace space;
  Family saturated;  // Z(X)
  MultiRelation rel;
};

/// Throws BadShape when R(x) is missing for some point or names a set
/// outside Z(X).
MSSpace make_ms_space(SSpace space, MultiRelation rel);

/// L_U = {Z in Z(X) : Z meets U}.  Throws NotInSX unless U is in S(X).
Family L_U(SSpace const& x, Family const& saturated, Subset u);
/// m_R(U) = {x : every Z in R(x) meets U}.  Throws NotInSX unless U is in
/// S(X).
Subset m_R(MSSpace const& x, Subset u);

/// m_R maps S(X) into S(X), and R(x) is the meet of the L_U with x in m_R(U).
Report check_ms_space(MSSpace const& x);

/// <X(A), K_A, R_m> with (P, Z) in R_m iff m^{-1}[P] misses I_A(Z).
struct MonotoneDual {
  DualSpace dual;
  MSSpace space;
};

MonotoneDual build_R_m(MonotoneSemilattice const& s);

/// Binary relation between two S-spaces, stored as T(x) for each source
/// point.
struct MeetRelation {
  SSpace source;
  SSpace target;
  std::vector<Subset> image;

  Subset operator()(std::size_t x) const { return image[x]; }
};

/// Throws BadShape when the images do not fit the spaces.
MeetRelation make_relation(SSpace source, SSpace target, std::vector<Subset> image);

/// Same points and the same subbase.
bool same_space(SSpace const& a, SSpace const& b);

/// Box_T(U) = {x : T(x) is contained in U}.
Subset box(MeetRelation const& t, Subset u);
/// T^{-1}[W] = {x : T(x) meets W}.
Subset inverse_image(MeetRelation const& t, Subset w);

/// Box_T maps S(X2) into S(X1), and every T(x) lies in C_K(X2).
Report meet_relation_check(MeetRelation const& t);
bool is_meet_relation(MeetRelation const& t);

/// The dual specialization order: x relates to every y in the closure of x.
MeetRelation specialization_relation(SSpace const& x);

/// T * R with R from X1 to X2 and T from X2 to X3: z is in (T * R)(x) when
/// every U in S(X3) containing T[R(x)] contains z.  Throws NotComposable when
/// R's target differs from T's source.
MeetRelation compose_star(MeetRelation const& t, MeetRelation const& r);
/// The same composite computed as the K-closure of T[R(x)]: X3 minus the
/// union of the subbase members missing T[R(x)].
MeetRelation compose_star_closure(MeetRelation const& t, MeetRelation const& r);

/// Both forms of the monotonicity condition for T between mS-spaces.
struct MonotoneCheck {
  bool diagram = false;    // m_{R1} Box_T = Box_T m_{R2} on S(X2)
  bool pointwise = false;  // U^c in R2[T(x)] iff T^{-1}[U^c] in R1(x)
  std::string witness;     // first failure of either form
};

/// Throws NotComposable when the spaces of T differ from those of m1, m2.
MonotoneCheck monotone_meet_relation_check(MeetRelation const& t, MSSpace const& m1, MSSpace const& m2);
bool is_monotone_meet_relation(MeetRelation const& t, MSSpace const& m1, MSSpace const& m2);

/// R_h from X(B) to X(A): (P, Q) in R_h iff h^{-1}[P] is contained in Q.
MeetRelation relation_of_homomorphism(Homomorphism const& h);

/// For a bijection f: X1 -> X2, R_f(x) = {f(y) : f(x) specializes above
/// f(y)} and T_f(f(y)) = {x : f(y) specializes above f(x)}.
struct BijectionRelations {
  MeetRelation r_f;  // X1 to X2
  MeetRelation t_f;  // X2 to X1
};

/// Throws BadShape unless `map` is a bijection.
BijectionRelations bijection_relations(SSpace const& x1, SSpace const& x2, std::vector<std::size_t> const& map);

/// R2 on X2 with (f(x), W) in R2 iff (x, f^{-1}[W]) in R1.  Throws
/// NotAnSSpace unless f carries K1 onto K2.
MSSpace transport(MSSpace const& m1, SSpace const& x2, std::vector<std::size_t> const& map);

/// m_R as an operator on S(X) indexed like `dual_semilattice(x.space).sets`.
/// Throws NotInSX when m_R(U) leaves S(X).
ElementMap dual_operator(MSSpace const& x, DualAlgebra const& algebra);

/// Algebra side: beta is an isomorphism of <A, m> onto <S(X(A)), m_{R_m}>,
/// m_{R_m} agrees with m^pi on E.  Space side on the dual: H_X carries R_m
/// onto R of the double dual.
Report duality_roundtrip(MonotoneSemilattice const& s);
/// Space side only: H_X is an isomorphism of mS-spaces onto the dual of
/// <S(X), m_R>.
Report duality_roundtrip(MSSpace const& x);

}  // namespace semidual
