#pragma once

#include <array>
#include <vector>

#include "semidual/canonical_extension.hpp"

namespace semidual {

/// Order-preserving map between semilattices.
struct OrderMap {
  Semilattice source;
  Semilattice target;
  ElementMap map;

  Element operator()(Element a) const { return map[a]; }
};

/// Throws NotOrderPreserving with the witnessing pair (a, b), a <= b,
/// f(a) !<= f(b); BadShape on a map of the wrong size or range.
OrderMap validate_order_map(Semilattice source, Semilattice target, ElementMap map);

/// f^{-1}[P] for a point P of the target dual.
Subset preimage(OrderMap const& f, Subset filter);

/// R_f, stored as R_f(P) for each point P of X(B).
/// (P, Z) in R_f iff f^{-1}[P] misses I_A(Z).
struct PiRelation {
  std::vector<Family> of_point;  // subsets of Z(X(A)), canonical
};

/// G_f, stored as G_f(P) for each point P of X(B).
/// (P, Y) in G_f iff psi(Y) is contained in f^{-1}[P].
struct SigmaRelation {
  std::vector<Family> of_point;  // subsets of C_K(X(A)), canonical
};

/// Both canonical extensions of f with the relations that present them.
/// Inputs outside E(X(A)) throw NotInExtension.
class MapExtension {
 public:
  explicit MapExtension(OrderMap f);

  OrderMap const& map() const { return f_; }
  CanonicalExtension const& source() const { return a_; }
  CanonicalExtension const& target() const { return b_; }
  PiRelation const& r() const { return r_; }
  SigmaRelation const& g() const { return g_; }

  /// Join of the meets of f over closed elements below V.
  Subset sigma(Subset v) const;
  /// R_f presentation: {P : every Z in R_f(P) meets V}.
  Subset pi(Subset v) const;

  /// sigma by the lattice formula, the topological formula, and via G_f.
  std::array<Subset, 3> sigma_routes(Subset v) const;
  /// pi by the lattice formula, the topological formula, the preimage
  /// formula on Z-complements, and via R_f.
  std::array<Subset, 4> pi_routes(Subset v) const;

 private:
  void require(Subset v) const;

  OrderMap f_;
  CanonicalExtension a_;
  CanonicalExtension b_;
  ClosedOpen a_co_;
  PiRelation r_;
  SigmaRelation g_;
};

PiRelation build_R_f(OrderMap const& f);
SigmaRelation build_G_f(OrderMap const& f);

Subset sigma_ext(OrderMap const& f, Subset v);
Subset pi_ext(OrderMap const& f, Subset v);

/// Exhaustive checks of the extension facts for one map.
Report extension_laws(OrderMap const& f);

}  // namespace semidual
