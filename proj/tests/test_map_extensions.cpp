#include "doctest.h"
#include "semidual/error.hpp"
#include "semidual/map_extensions.hpp"
#include "support.hpp"

using namespace semidual;
using semidual::testing::chain;
using semidual::testing::lattice_L;

namespace {

Element el(Semilattice const& s, char const* label) { return *s.find(label); }

ElementMap constant(Semilattice const& s, Element value) { return ElementMap(s.size(), value); }

ElementMap join_with(Semilattice const& s, Element c) {
  ElementMap out;
  for (Element x = 0; x < s.size(); ++x) out.push_back(*s.join(x, c));
  return out;
}

/// Finite oracle: every V in E is beta(a) for a unique a, so both extensions
/// send V to beta(f(a)).
Subset collapsed_extension(OrderMap const& f, Subset v) {
  auto const da = dual_space(f.source);
  auto const db = dual_space(f.target);
  for (Element a = 0; a < f.source.size(); ++a)
    if (da.beta[a] == v) return db.beta[f(a)];
  FAIL("V is not an embedded element");
  return {};
}

std::string why(Report const& r) {
  return r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->witness : std::string{};
}

}  // namespace

TEST_CASE("order maps are validated") {
  auto const L = lattice_L();
  ElementMap swap{6, 5, 4, 3, 2, 1, 0};
  try {
    validate_order_map(L, L, swap);
    FAIL("expected NotOrderPreserving");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotOrderPreserving);
    REQUIRE(e.witness().size() == 2);
    CHECK(L.leq(e.witness()[0], e.witness()[1]));
  }
  CHECK_THROWS_AS(validate_order_map(L, L, ElementMap{0, 1}), Error);
}

TEST_CASE("extensions of the identity") {
  auto const L = lattice_L();
  auto const f = validate_order_map(L, L, identity_homomorphism(L).map);
  MapExtension const ext(f);
  for (auto v : ext.source().elements) {
    CHECK(ext.sigma(v) == v);
    CHECK(ext.pi(v) == v);
  }
  auto const& d = ext.source().dual;
  auto const r = build_R_f(f);
  for (std::size_t p = 0; p < d.points.size(); ++p)
    for (Element a = 0; a < L.size(); ++a) {
      auto const z = d.beta[a].complement(d.points.size());
      CHECK(family_has(r.of_point[p], z) == !d.points[p].intersects(L.down(a)));
    }
  auto const g = build_G_f(f);
  for (std::size_t p = 0; p < d.points.size(); ++p)
    for (auto y : d.space.subbasic_closed()) CHECK(family_has(g.of_point[p], y) == psi(d, y).subset_of(d.points[p]));
}

TEST_CASE("constant maps") {
  auto const L = lattice_L();
  auto const top = validate_order_map(L, L, constant(L, L.top()));
  for (auto const& row : build_R_f(top).of_point) CHECK(row.empty());

  auto const f = validate_order_map(L, L, constant(L, el(L, "e")));
  MapExtension const ext(f);
  auto const beta_e = ext.target().embed(el(L, "e"));
  auto const beta_d = ext.source().embed(el(L, "d"));
  CHECK(ext.sigma(beta_d) == collapsed_extension(f, beta_d));
  CHECK(ext.sigma(beta_d) == beta_e);
  CHECK(ext.sigma(Subset{}) == beta_e);
  try {
    ext.sigma(Subset::of({3}));
    FAIL("expected NotInExtension");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotInExtension);
  }
  CHECK_THROWS_AS(ext.pi(Subset::of({0, 1})), Error);
}

TEST_CASE("join with c on the worked lattice") {
  auto const L = lattice_L();
  auto const f = validate_order_map(L, L, join_with(L, el(L, "c")));
  MapExtension const ext(f);
  auto const v = ext.source().embed(el(L, "e"));
  auto const routes = ext.pi_routes(v);
  CHECK(routes[0] == Subset::of({0, 1, 2}));
  for (auto x : routes) CHECK(x == routes[0]);
  for (auto x : ext.sigma_routes(v)) CHECK(x == routes[0]);
  for (auto w : ext.source().elements) {
    CHECK(ext.pi(w) == collapsed_extension(f, w));
    CHECK(ext.sigma(w) == collapsed_extension(f, w));
  }
  CHECK(extension_laws(f).ok());
}

TEST_CASE("extension laws over all order-preserving maps") {
  auto const algebras = enumerate_semilattices(4);
  for (auto const& a : algebras)
    for (auto const& b : algebras)
      for (auto const& m : all_order_preserving_maps(a, b)) {
        auto const f = validate_order_map(a, b, m);
        auto const r = extension_laws(f);
        auto const reason = why(r);
        INFO(reason);
        CHECK(r.ok());
        MapExtension const ext(f);
        for (auto v : ext.source().elements) CHECK(ext.pi(v) == collapsed_extension(f, v));
      }
  auto const L = lattice_L();
  for (auto const& m : all_order_preserving_maps(L, chain(3))) CHECK(extension_laws(validate_order_map(L, chain(3), m)).ok());
}
