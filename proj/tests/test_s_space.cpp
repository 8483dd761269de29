#include "doctest.h"
#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"
#include "semidual/s_space.hpp"
#include "support.hpp"

using namespace semidual;
using semidual::testing::chain;
using semidual::testing::lattice_L;

namespace {

Subset pts(std::initializer_list<std::size_t> one_based) {
  Subset out;
  for (auto p : one_based) out = out.with(p - 1);
  return out;
}

Element el(Semilattice const& s, char const* label) { return *s.find(label); }

}  // namespace

TEST_CASE("dual space of the worked lattice") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  CHECK(d.points.size() == 4);
  CHECK(d.space.labels() == std::vector<std::string>{"P1", "P2", "P3", "P4"});
  CHECK(d.beta[el(L, "0")] == Subset{});
  CHECK(d.beta[el(L, "1")] == pts({1, 2, 3, 4}));
  CHECK(d.beta[el(L, "a")] == pts({1}));
  CHECK(d.beta[el(L, "b")] == pts({2}));
  CHECK(d.beta[el(L, "c")] == pts({3}));
  CHECK(d.beta[el(L, "e")] == pts({1, 2, 3}));
  CHECK(d.beta[el(L, "d")] == pts({3, 4}));
  CHECK(d.space.subbase().size() == 7);
  CHECK(check_s_space(d.space).ok());
}

TEST_CASE("dual spaces of chains") {
  auto const d2 = dual_space(chain(2));
  CHECK(d2.space.size() == 1);
  CHECK(d2.space.subbase() == Family{Subset{}, Subset::of({0})});
  CHECK(d2.space.s_sets() == Family{Subset{}, Subset::of({0})});
  CHECK(d2.space.subbasic_closed() == Family{Subset{}, Subset::of({0})});

  // 0 < x < 1: the proper filters [x) and [1) are both irreducible.
  auto const c3 = chain(3);
  auto const d3 = dual_space(c3);
  CHECK(d3.points == Family{Subset::of({1, 2}), Subset::of({2})});
  CHECK(d3.beta[2] == Subset::of({0, 1}));
  CHECK(d3.beta[1] == Subset::of({0}));
  CHECK(d3.beta[0] == Subset{});
}

TEST_CASE("subbasic closed sets and phi/psi on the worked lattice") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  Family betas(d.beta.begin(), d.beta.end());
  CHECK(d.space.subbasic_closed() == canonical(betas));
  CHECK(d.space.subbasic_closed().size() == 7);
  CHECK(family_has(d.space.subbasic_closed(), d.space.universe()));

  CHECK(phi(d, L.up(el(L, "e"))) == pts({1, 2, 3}));
  CHECK(phi(d, L.up(L.top())) == d.space.universe());
  for (auto f : all_filters(L)) CHECK(psi(d, phi(d, f)) == f);
}

TEST_CASE("axiom failures are reported") {
  SSpace indistinct(2, {Subset{}, Subset::of({0, 1})});
  auto const r = check_s_space(indistinct);
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure()->name == "S1 T0");

  // Remove beta(a)^c from the dual of L; no union of the rest recovers it.
  auto const L = lattice_L();
  auto const d = dual_space(L);
  Family reduced;
  for (auto u : d.space.subbase())
    if (u != d.beta[el(L, "a")].complement(4)) reduced.push_back(u);
  SSpace damaged(4, reduced, d.space.labels());
  auto const rd = check_s_space(damaged);
  CHECK(damaged.subbase().size() == 6);
  CHECK_FALSE(rd.ok());
  REQUIRE(rd.first_failure() != nullptr);
  CHECK(rd.first_failure()->name == "S3");
  CHECK(rd.first_failure()->witness == "x=P1 U,V={P1,P2} {P1,P3,P4}");
}

TEST_CASE("Y-families") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  auto const& X = d.space;
  // Families from dually directed subfamilies of K are Y-families for every Y.
  Family chainK{d.beta[el(L, "d")].complement(4), d.beta[el(L, "c")].complement(4)};
  Family a_l;
  for (auto u : chainK) a_l.push_back(u.complement(4));
  a_l = canonical(a_l);
  for (auto y : X.subbasic_closed()) CHECK(is_Y_family(X, y, a_l).holds);
  auto const w = is_Y_family(X, pts({3}), Family{X.universe()});
  CHECK(w.holds);
  REQUIRE(w.entries.size() == 1);
  CHECK(pts({3}).subset_of(w.entries[0].h));
  CHECK(w.entries[0].c == X.universe());

  // {beta(a), beta(b)} is not a Y-family for Y = X: no C above both.
  auto const bad = is_Y_family(X, X.universe(), canonical(Family{d.beta[el(L, "a")], d.beta[el(L, "b")]}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.counter.has_value());
  CHECK_THROWS_AS(is_Y_family(X, pts({1, 2}), a_l), Error);
}

TEST_CASE("subbasic saturated sets") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  Family expected;
  for (auto b : d.beta) expected.push_back(b.complement(4));
  CHECK(subbasic_saturated(d.space) == canonical(expected));
  for (auto u : d.space.subbase()) CHECK(family_has(subbasic_saturated(d.space), u));
}

TEST_CASE("specialization and closure") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  CHECK(d.space.specializes(2, 3));   // P3 in cl(P4)
  CHECK_FALSE(d.space.specializes(3, 2));
  for (std::size_t p = 0; p < 4; ++p) CHECK(d.space.point_closure(p).contains(p));
  // The closure of a point is the least member of C_K above it, but sets of
  // points can have strictly smaller closures.
  CHECK(d.space.closure(pts({1, 2})) == pts({1, 2}));
  CHECK(d.beta[el(L, "e")] == pts({1, 2, 3}));
  CHECK(specialization_dot(d.space).find("\"P3\" -> \"P4\"") != std::string::npos);
  CHECK(beta_dot(d).find("\"a\" -- \"P1\"") != std::string::npos);
}

TEST_CASE("H_X on the worked lattice and on a one-point space") {
  auto const d = dual_space(lattice_L());
  auto const h = H_X(d.space);
  CHECK(h.map.size() == 4);
  CHECK(is_homeomorphism(d.space, h.codomain.space, h.map));
  SSpace one(1, {Subset::of({0})});
  auto const h1 = H_X(one);
  CHECK(h1.map == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(H_X(SSpace(2, {Subset::of({0, 1})})), Error);
}

TEST_CASE("duality laws on every semilattice up to six elements") {
  for (auto const& s : enumerate_semilattices(6)) {
    auto const r = s_space_laws(s);
    for (auto const& c : r.checks()) CHECK_MESSAGE(c.pass, c.name, " ", c.witness);
  }
}
