#include <algorithm>

#include "doctest.h"
#include "semidual/congruence_vietoris.hpp"
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

Element el(Semilattice const& s, char const* label) { return *s.find(label); }

/// Members of a family picked out by an index subset.
Family pick(Family const& members, Subset indices) {
  Family out;
  indices.for_each([&](std::size_t k) { out.push_back(members[k]); });
  return out;
}

std::string why(Report const& r) {
  return r.first_failure() ? r.first_failure()->name + " " + r.first_failure()->witness : std::string{};
}

/// Independent count: pairs closed under the compatibility rule, by direct
/// quantification over all pairs of pairs.
std::size_t count_congruences(Semilattice const& s) {
  std::size_t count = 0;
  for_each_partition(s.size(), [&](std::vector<std::size_t> const& c) {
    bool ok = true;
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b)
        for (Element x = 0; x < s.size(); ++x)
          for (Element y = 0; y < s.size(); ++y)
            if (c[a] == c[b] && c[x] == c[y] && c[s.meet(a, x)] != c[s.meet(b, y)]) ok = false;
    if (ok) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("the family of R_id on the worked lattice") {
  auto const L = lattice_L();
  auto const d = dual_space(L);
  auto const rid = relation_of_homomorphism(identity_homomorphism(L));
  CHECK(is_one_to_one(rid));
  auto const vf = family_of_relation(rid);
  CHECK(vf.members == canonical({pts({1}), pts({2}), pts({3}), pts({3, 4})}));
  auto const H = [&](char const* a) { return canonical(pick(vf.members, H_a(d, vf.members, el(L, a)))); };
  CHECK(H("0") == vf.members);
  CHECK(H("a") == canonical({pts({2}), pts({3}), pts({3, 4})}));
  CHECK(H("b") == canonical({pts({1}), pts({3}), pts({3, 4})}));
  CHECK(H("c") == canonical({pts({1}), pts({2}), pts({3, 4})}));
  CHECK(H("d") == canonical({pts({1}), pts({2})}));
  CHECK(H("e") == Family{pts({3, 4})});
  CHECK(H("1").empty());

  auto const meet = H_a(d, vf.members, el(L, "a")) & H_a(d, vf.members, el(L, "d"));
  CHECK(pick(vf.members, meet) == Family{pts({2})});
  CHECK_FALSE(family_has(vf.space.subbase(), meet));

  auto const r = check_vietoris_family(d, vf);
  auto const reason = why(r);
  INFO(reason);
  CHECK(r.ok());
  CHECK(family_of_theta(L, Congruence::identity(L.size())).members == vf.members);
  CHECK(theta_of_family(d, vf) == Congruence::identity(L.size()));
}

TEST_CASE("one-to-one relations and onto homomorphisms") {
  auto const c2 = chain(2);
  auto const c3 = chain(3);
  auto const embed = validate_homomorphism(c2, c3, ElementMap{0, 2});
  auto const r = relation_of_homomorphism(embed);
  CHECK(is_meet_relation(r));
  CHECK_FALSE(is_one_to_one(r));
  CHECK_FALSE(box_is_onto(r));
  try {
    family_of_relation(r);
    FAIL("expected NotOneToOne");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotOneToOne);
  }
  auto const d = dual_space(lattice_L());
  CHECK(is_one_to_one(specialization_relation(d.space)));

  for (auto const& a : enumerate_semilattices(5))
    for (auto const& b : enumerate_semilattices(4))
      for (auto const& h : all_homomorphisms(a, b)) {
        auto const rh = relation_of_homomorphism(h);
        CHECK(is_one_to_one(rh) == is_onto(h));
        CHECK(box_is_onto(rh) == is_onto(h));
      }
}

TEST_CASE("families are rejected or accepted") {
  auto const d = dual_space(lattice_L());
  CHECK_THROWS_AS(make_family(d.space, {Subset{}, pts({1})}), Error);
  CHECK_THROWS_AS(make_family(d.space, {pts({1, 2})}), Error);
  auto const single = make_family(d.space, {pts({3, 4})});
  CHECK(check_vietoris_family(single).ok());
  auto const rf = relation_of_family(single);
  CHECK(rf.image.size() == 1);
  CHECK(rf.image[0] == pts({3, 4}));

  auto const broken = make_family(d.space, {pts({1}), pts({2}), pts({1, 2, 3})});
  auto const report = check_vietoris_family(broken);
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->name == "S3");
  try {
    relation_of_family(broken);
    FAIL("expected NotAVietorisFamily");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAVietorisFamily);
  }
  CHECK_THROWS_AS(family_of_theta(lattice_L(), Congruence(std::vector<std::size_t>{0, 1, 2, 3, 4, 4, 5})), Error);
}

TEST_CASE("congruences of small semilattices") {
  CHECK(all_congruences(chain(2)).size() == 2);
  auto const L = lattice_L();
  auto const con = all_congruences(L);
  CHECK(con.size() == count_congruences(L));
  CHECK(con.size() == 38);
  auto const id = identity_homomorphism(L).map;
  CHECK(all_congruences(L, &id).size() == con.size());
  CHECK(algebraic_subsets(L).size() == con.size());

  auto const total = family_of_theta(L, Congruence::total(L.size()));
  CHECK(total.members.empty());
  CHECK(check_vietoris_family(total).ok());
  CHECK(sigma_of(L, Congruence::identity(L.size())) == all_filters(L));
  CHECK(fajtlowicz_schmidt(chain(2)).ok());
  CHECK(algebraic_subsets(chain(2)).size() == 2);

  for (auto const& s : enumerate_semilattices(5)) {
    CHECK(all_congruences(s).size() == count_congruences(s));
    auto const r = congruence_laws(s);
    auto const reason = why(r);
    INFO(reason);
    CHECK(r.ok());
  }
  auto const r = congruence_laws(L);
  auto const reason = why(r);
  INFO(reason);
  CHECK(r.ok());
}

TEST_CASE("monotone congruences") {
  auto const L = lattice_L();
  auto const id = identity_homomorphism(L).map;
  auto const r = congruence_laws(L, &id);
  auto const reason = why(r);
  INFO(reason);
  CHECK(r.ok());
  for (auto const& s : enumerate_semilattices(4))
    for (auto const& m : all_monotone_operators(s)) {
      auto const rm = congruence_laws(s, &m);
      auto const reason_m = why(rm);
      INFO(reason_m);
      CHECK(rm.ok());
    }

  auto const md = build_R_m(validate_monotone(L, id));
  auto const lattice = vietoris_lattice(md.space);
  CHECK(lattice.families.size() == 38);
  CHECK(lattice.report.ok());
}

TEST_CASE("a Vietoris family that is not monotone") {
  std::size_t found = 0;
  for (auto const& s : enumerate_semilattices(4))
    for (auto const& m : all_monotone_operators(s)) {
      auto const md = build_R_m(validate_monotone(s, m));
      for (auto const& theta : all_congruences(s)) {
        auto const vf = family_of_theta(s, theta);
        bool const compatible = is_congruence(s, theta, &m);
        CHECK(monotone_family_check(md.space, vf).ok() == compatible);
        if (compatible) continue;
        ++found;
        try {
          require_monotone_family(md.space, vf);
          FAIL("expected NotMIncreasing");
        } catch (Error const& e) {
          CHECK(e.kind() == ErrorKind::NotMIncreasing);
          CHECK(e.witness().size() == 2);
        }
      }
    }
  CHECK(found > 0);
}

TEST_CASE("induced homeomorphisms of onto monotone homomorphisms") {
  auto const L = lattice_L();
  auto const id = identity_homomorphism(L).map;
  auto const r = induced_homeomorphism_check(identity_homomorphism(L), id, id);
  auto const reason = why(r);
  INFO(reason);
  CHECK(r.ok());

  std::size_t checked = 0;
  for (auto const& a : enumerate_semilattices(4))
    for (auto const& m : all_monotone_operators(a))
      for (auto const& theta : all_congruences(a, &m)) {
        auto const q = quotient(a, theta, &m);
        auto const rq = induced_homeomorphism_check(q.projection, m, *q.op);
        auto const reason_q = why(rq);
        INFO(reason_q);
        CHECK(rq.ok());
        ++checked;
      }
  CHECK(checked > 0);
  CHECK_FALSE(induced_homeomorphism_check(identity_homomorphism(chain(3)), ElementMap{0, 1, 2}, ElementMap{2, 2, 2}).ok());
}

TEST_CASE("Vietoris lattices") {
  auto const c2 = vietoris_lattice(dual_space(chain(2)).space);
  CHECK(c2.families.size() == 2);
  CHECK(c2.report.ok());
  auto const L = vietoris_lattice(dual_space(lattice_L()).space);
  CHECK(L.families.size() == all_congruences(lattice_L()).size());
  CHECK(L.report.ok());
  CHECK_THROWS_AS(vietoris_lattice(dual_space(lattice_L()).space, 3), Error);
}
