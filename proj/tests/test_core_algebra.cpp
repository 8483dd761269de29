#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "semidual/error.hpp"
#include "semidual/semilattice.hpp"
#include "support.hpp"

using namespace semidual;
using semidual::testing::chain;
using semidual::testing::lattice_L;

namespace {

// Brute force: every commutative idempotent table with unit n-1, kept when
// associative, reduced modulo relabeling by the minimal permuted table.
std::size_t brute_force_count(std::size_t n) {
  std::vector<std::pair<Element, Element>> free;
  for (Element a = 0; a + 1 < n; ++a)
    for (Element b = a + 1; b + 1 < n; ++b) free.emplace_back(a, b);
  std::set<std::vector<Element>> classes;
  std::vector<Element> choice(free.size(), 0);
  std::vector<Element> perm(n);
  while (true) {
    MeetTable t(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
      t[a][a] = a;
      t[a][n - 1] = t[n - 1][a] = a;
    }
    for (std::size_t k = 0; k < free.size(); ++k) t[free[k].first][free[k].second] = t[free[k].second][free[k].first] = choice[k];
    bool assoc = true;
    for (Element a = 0; a < n && assoc; ++a)
      for (Element b = 0; b < n && assoc; ++b)
        for (Element c = 0; c < n && assoc; ++c) assoc = t[t[a][b]][c] == t[a][t[b][c]];
    if (assoc) {
      std::iota(perm.begin(), perm.end(), Element{0});
      std::vector<Element> best;
      do {
        std::vector<Element> flat(n * n);
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b) flat[perm[a] * n + perm[b]] = perm[t[a][b]];
        if (best.empty() || flat < best) best = flat;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return classes.size();
}

}  // namespace

TEST_CASE("the worked lattice validates and has the expected order") {
  auto const L = lattice_L();
  CHECK(L.size() == 7);
  CHECK(L.meet(*L.find("e"), *L.find("d")) == *L.find("c"));
  CHECK(L.leq(*L.find("c"), *L.find("e")));
  CHECK_FALSE(L.leq(*L.find("a"), *L.find("d")));
  for (Element a = 0; a < L.size(); ++a) CHECK(L.leq(a, L.top()));
  CHECK(L.join(*L.find("a"), *L.find("d")) == L.top());
  CHECK(L.join(*L.find("a"), *L.find("b")) == *L.find("e"));
}

TEST_CASE("validation reports the failing law with its witness") {
  CHECK_NOTHROW(validate_semilattice({{0}}, 0));
  try {
    validate_semilattice({{0, 1}, {0, 1}}, 1);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotCommutative);
    CHECK(e.witness() == std::vector<std::size_t>{0, 1});
  }
  // idempotent, commutative, unit 3, but (0^2)^1 = 2 while 0^(2^1) = 0.
  try {
    validate_semilattice({{0, 2, 0, 0}, {2, 1, 2, 1}, {0, 2, 2, 2}, {0, 1, 2, 3}}, 3);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(e.witness().size() == 3);
  }
  CHECK_THROWS_AS(validate_semilattice({{1, 0}, {0, 1}}, 1), Error);
  try {
    validate_semilattice({{0, 0}, {0, 1}}, 0);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::BadUnit);
  }
  CHECK_THROWS_AS(semilattice_from_covers({"x", "y", "1"}, {{0, 2}, {1, 2}, {2, 0}}, 2), Error);
}

TEST_CASE("monotone operators") {
  auto const L = lattice_L();
  ElementMap id(L.size());
  std::iota(id.begin(), id.end(), Element{0});
  CHECK_NOTHROW(validate_monotone(L, id));
  CHECK_NOTHROW(validate_monotone(L, ElementMap(L.size(), L.top())));
  try {
    validate_monotone(chain(2), {1, 0});
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotMonotone);
    CHECK(e.witness() == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("quotients") {
  auto const L = lattice_L();
  auto const q_id = quotient(L, Congruence::identity(7));
  CHECK(q_id.algebra == L);
  CHECK(is_onto(q_id.projection));
  auto const q_all = quotient(L, Congruence::total(7));
  CHECK(q_all.algebra.size() == 1);

  // Oracle: saturate {a,0} by hand-rolled pair closure over the relation.
  std::set<std::pair<Element, Element>> rel;
  for (Element x = 0; x < 7; ++x) rel.insert({x, x});
  rel.insert({1, 0});
  rel.insert({0, 1});
  for (bool grown = true; grown;) {
    grown = false;
    auto const snapshot = rel;
    for (auto [x, y] : snapshot) {
      for (Element z = 0; z < 7; ++z) grown |= rel.insert({L.meet(x, z), L.meet(y, z)}).second;
      for (auto [u, v] : snapshot)
        if (y == u) grown |= rel.insert({x, v}).second;
      grown |= rel.insert({y, x}).second;
    }
  }
  std::set<Element> reps;
  for (Element x = 0; x < 7; ++x) {
    Element r = x;
    for (auto [u, v] : rel)
      if (u == x) r = std::min(r, v);
    reps.insert(r);
  }
  auto const theta = congruence_generated_by(L, {{1, 0}});
  auto const q = quotient(L, theta);
  CHECK(q.algebra.size() == reps.size());
  CHECK(q.algebra.size() == 6);
  for (auto [x, y] : rel) CHECK(theta.related(x, y));
  CHECK_THROWS_AS(quotient(L, Congruence({0, 1, 2, 3, 4, 4, 5})), Error);
}

TEST_CASE("enumeration counts agree with the brute-force table oracle") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(semilattices_of_size(n).size() == brute_force_count(n));
  CHECK(semilattices_of_size(4).size() == 2);
  CHECK(semilattices_of_size(5).size() == 5);
  CHECK(semilattices_of_size(6).size() == 15);
  CHECK(semilattices_of_size(7).size() == 53);
}

TEST_CASE("enumerated semilattices satisfy the laws and are pairwise non-isomorphic") {
  for (auto const& s : enumerate_semilattices(6)) {
    CHECK_NOTHROW(validate_semilattice(s.table(), s.top()));
    CHECK(s.top() == s.size() - 1);
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b)
        if (s.leq(a, b)) CHECK(a <= b);
  }
  std::set<std::pair<std::size_t, std::uint64_t>> codes;
  for (auto const& s : enumerate_semilattices(6)) CHECK(codes.insert({s.size(), canonical_order_code(s)}).second);
  CHECK(canonical_order_code(lattice_L()) != 0);
}

TEST_CASE("homomorphisms compose associatively with identity neutral") {
  auto const c2 = chain(2);
  auto const c3 = chain(3);
  auto const hs = all_homomorphisms(c3, c3);
  auto const gs = all_homomorphisms(c2, c3);
  auto const ks = all_homomorphisms(c3, c2);
  CHECK(!hs.empty());
  for (auto const& h : hs) {
    CHECK(compose(identity_homomorphism(c3), h).map == h.map);
    CHECK(compose(h, identity_homomorphism(c3)).map == h.map);
    for (auto const& g : gs)
      for (auto const& k : ks) CHECK(compose(compose(k, h), g).map == compose(k, compose(h, g)).map);
  }
  CHECK_THROWS_AS(validate_homomorphism(c2, c3, {0, 1}), Error);
  CHECK_NOTHROW(validate_homomorphism(c2, c3, {0, 2}));
}

TEST_CASE("partitions and congruence lattice operations") {
  std::size_t count = 0;
  for_each_partition(4, [&](auto const&) { ++count; });
  CHECK(count == 15);  // Bell(4)
  auto const L = lattice_L();
  auto const a = congruence_generated_by(L, {{1, 0}});
  auto const b = congruence_generated_by(L, {{2, 0}});
  auto const j = congruence_join(L, a, b);
  CHECK(a.refines(j));
  CHECK(b.refines(j));
  CHECK(is_congruence(L, j));
  CHECK(congruence_meet(a, b).refines(a));
}
