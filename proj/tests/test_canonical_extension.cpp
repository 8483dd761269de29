#include "doctest.h"
#include "semidual/canonical_extension.hpp"
#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"
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

Subset els(Semilattice const& s, std::initializer_list<char const*> labels) {
  Subset out;
  for (auto l : labels) out = out.with(*s.find(l));
  return out;
}

/// Independent E: intersections of arbitrary subfamilies of {U^c}.
Family brute_force_elements(CanonicalExtension const& ce) {
  Family complements;
  for (auto u : ce.saturated) complements.push_back(u.complement(ce.dual.space.size()));
  Family out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << complements.size()); ++bits) {
    Subset meet = ce.dual.space.universe();
    for (std::size_t k = 0; k < complements.size(); ++k)
      if ((bits >> k) & 1U) meet = meet & complements[k];
    out.push_back(meet);
  }
  return canonical(out);
}

}  // namespace

TEST_CASE("alpha and I_A on the worked lattice") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  CHECK(alpha(d, L.down(*L.find("d"))) == pts({1, 2}));
  CHECK(alpha(d, L.carrier()) == Subset{});
  CHECK(alpha(d, els(L, {"0"})) == pts({1, 2, 3, 4}));
  CHECK(ideal_of(d, pts({1, 2})) == els(L, {"0", "c", "d"}));
  CHECK_THROWS_AS(alpha(d, els(L, {"a", "b"})), Error);
  try {
    ideal_of(d, pts({1, 3}));
    FAIL("expected NotSaturated");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotSaturated);
  }
}

TEST_CASE("E(X(A)) of the worked lattice") {
  auto const L = lattice_L();
  auto const ce = build_extension(L);
  CHECK(ce.elements.size() == 7);
  CHECK(ce.elements == brute_force_elements(ce));
  CHECK(ce.elements == ce.dual.space.subbasic_closed());
  CHECK(lambda_closure(ce, pts({1, 2})) == ce.embed(*L.find("e")));
  CHECK(lambda_closure(ce, Subset{}) == Subset{});
  CHECK(ce.join({pts({1}), pts({2})}) == pts({1, 2, 3}));
  CHECK(ce.meet({}) == ce.dual.space.universe());
  try {
    lambda_closure(ce, pts({4}));
    FAIL("expected NotAnUpset");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAnUpset);
  }
  CHECK(verify_dense(ce).ok());
  CHECK(verify_compact(ce).ok());
  auto const co = closed_open_elements(ce);
  CHECK(co.closed.size() == 7);
  CHECK(co.open == co.closed);
}

TEST_CASE("E of the one-element semilattice") {
  auto const ce = build_extension(chain(1));
  CHECK(ce.dual.points.empty());
  CHECK(ce.elements == Family{Subset{}});
  CHECK(canonical_extension_laws(chain(1)).ok());
}

TEST_CASE("corrupted candidates are rejected") {
  auto const L = lattice_L();
  auto const base = build_extension(L);

  auto dropped = base;
  std::erase(dropped.elements, base.embed(*L.find("e")));
  auto const r1 = verify_dense(dropped);
  REQUIRE(r1.first_failure() != nullptr);
  CHECK(r1.first_failure()->name == "embedding lands in E");
  CHECK(r1.first_failure()->witness.find("beta(e)") == 0);

  auto added = base;
  added.elements.push_back(pts({1, 2}));
  canonicalize(added.elements);
  auto const r2 = verify_dense(added);
  REQUIRE(r2.first_failure() != nullptr);
  CHECK(r2.first_failure()->name == "every element is a meet of open elements");
  CHECK(r2.first_failure()->witness == "{P1,P2}");
}

TEST_CASE("Gouveia-Priestley completion of the worked lattice") {
  auto const L = lattice_L();
  auto const gp = gouveia_priestley(L);
  auto const d = dual_space(L);
  CHECK(gp.filters.size() == 7);
  for (Element a = 0; a < L.size(); ++a) {
    Subset image;
    for (std::size_t p = 0; p < d.points.size(); ++p)
      if (gp.e[a].contains(family_index(gp.filters, d.points[p]))) image = image.with(p);
    CHECK(image == d.beta[a]);
  }
  CHECK(gp.c.size() == 7);
  CHECK(gp.report.ok());
  CHECK_THROWS_AS(gouveia_priestley(L, 3), Error);
}

TEST_CASE("extension laws over small semilattices") {
  for (auto const& s : enumerate_semilattices(5)) {
    auto const r = canonical_extension_laws(s);
    auto const why = r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->witness : std::string{};
    INFO(why);
    CHECK(r.ok());
    auto const ce = build_extension(s);
    CHECK(ce.elements == brute_force_elements(ce));
    CHECK(ce.elements.size() == s.size());
  }
  for (auto const& s : enumerate_semilattices(4)) {
    auto const gp = gouveia_priestley(s);
    auto const why = gp.report.first_failure() ? gp.report.first_failure()->name : std::string{};
    INFO(why);
    CHECK(gp.report.ok());
  }
}
