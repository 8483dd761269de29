#include "semidual/order_structures.hpp"

#include "semidual/error.hpp"

namespace semidual {

bool is_upset(Semilattice const& s, Subset x) {
  bool ok = true;
  x.for_each([&](Element a) { ok = ok && s.up(a).subset_of(x); });
  return ok;
}

bool is_downset(Semilattice const& s, Subset x) {
  bool ok = true;
  x.for_each([&](Element a) { ok = ok && s.down(a).subset_of(x); });
  return ok;
}

bool is_filter(Semilattice const& s, Subset x) {
  if (!x.contains(s.top()) || !is_upset(s, x)) return false;
  bool ok = true;
  x.for_each([&](Element a) { x.for_each([&](Element b) { ok = ok && x.contains(s.meet(a, b)); }); });
  return ok;
}

bool is_directed(Semilattice const& s, Subset x) {
  bool ok = true;
  x.for_each([&](Element a) {
    x.for_each([&](Element b) { ok = ok && (s.up(a) & s.up(b)).intersects(x); });
  });
  return ok;
}

bool is_order_ideal(Semilattice const& s, Subset x) {
  return !x.empty() && is_downset(s, x) && is_directed(s, x);
}

Subset generated_filter(Semilattice const& s, Subset x) {
  Subset meets = x.with(s.top());
  for (Subset previous; previous != meets;) {
    previous = meets;
    previous.for_each([&](Element a) { previous.for_each([&](Element b) { meets = meets.with(s.meet(a, b)); }); });
  }
  Subset out;
  meets.for_each([&](Element a) { out = out | s.up(a); });
  return out;
}

Family all_filters(Semilattice const& s) {
  Family out;
  for_each_closed_set(
      s.size(), [&](Subset x) { return generated_filter(s, x); }, [&](Subset f) { out.push_back(f); });
  canonicalize(out);
  return out;
}

namespace {

bool irreducible_among(Family const& filters, Subset f, Subset carrier) {
  if (f == carrier) return false;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    auto const f1 = filters[i];
    if (f1 == f || !f.subset_of(f1)) continue;
    for (std::size_t j = i + 1; j < filters.size(); ++j) {
      auto const f2 = filters[j];
      if (f2 == f || !f.subset_of(f2)) continue;
      if ((f1 & f2) == f) return false;
    }
  }
  return true;
}

}  // namespace

bool is_irreducible(Semilattice const& s, Subset f) {
  if (!is_filter(s, f)) return false;
  return irreducible_among(all_filters(s), f, s.carrier());
}

Family irreducible_filters(Semilattice const& s) {
  auto const filters = all_filters(s);
  Family out;
  for (auto f : filters)
    if (irreducible_among(filters, f, s.carrier())) out.push_back(f);
  return out;
}

bool is_irreducible_char(Semilattice const& s, Subset f) {
  if (!is_filter(s, f)) throw Error(ErrorKind::BadShape, "not a filter");
  if (f == s.carrier()) throw Error(ErrorKind::NotProper, "the whole carrier is not a proper filter");
  auto const outside = s.carrier() - f;
  bool all = true;
  outside.for_each([&](Element a) {
    outside.for_each([&](Element b) {
      if (!all) return;
      bool found = false;
      outside.for_each([&](Element c) {
        f.for_each([&](Element g) { found = found || (s.leq(s.meet(a, g), c) && s.leq(s.meet(b, g), c)); });
      });
      all = found;
    });
  });
  return all;
}

Family all_order_ideals(Semilattice const& s) {
  Family out;
  for_each_closed_set(
      s.size(),
      [&](Subset x) {
        Subset d;
        x.for_each([&](Element a) { d = d | s.down(a); });
        return d;
      },
      [&](Subset d) {
        if (is_order_ideal(s, d)) out.push_back(d);
      });
  canonicalize(out);
  return out;
}

Family principal_downsets(Semilattice const& s) {
  Family out;
  for (Element a = 0; a < s.size(); ++a) out.push_back(s.down(a));
  canonicalize(out);
  return out;
}

bool is_F_ideal(Semilattice const& s, Subset f, Subset i) {
  if (!is_downset(s, i)) throw Error(ErrorKind::NotADownset, "the set is not a downset");
  bool all = true;
  i.for_each([&](Element a) {
    i.for_each([&](Element b) {
      if (!all) return;
      bool found = false;
      i.for_each([&](Element c) {
        f.for_each([&](Element g) { found = found || (s.leq(s.meet(a, g), c) && s.leq(s.meet(b, g), c)); });
      });
      all = found;
    });
  });
  return all;
}

Subset separate(Semilattice const& s, Subset f, Subset i) {
  if (f.intersects(i)) throw Error(ErrorKind::NotDisjoint, "the filter meets the ideal", i.intersects(f) ? (f & i).members() : std::vector<std::size_t>{});
  if (i.empty() || !is_downset(s, i) || !(is_directed(s, i) || is_F_ideal(s, f, i)))
    throw Error(ErrorKind::NotAnIdeal, "expected a nonempty order-ideal or F-ideal");
  for (auto p : irreducible_filters(s))
    if (f.subset_of(p) && !p.intersects(i)) return p;
  throw Error(ErrorKind::NotAnIdeal, "no separating irreducible filter");
}

Report order_structure_laws(Semilattice const& s) {
  Report r;
  auto const filters = all_filters(s);
  auto const labels = s.labels();

  bool principal = filters.size() == s.size();
  for (Element a = 0; a < s.size(); ++a) principal = principal && family_has(filters, s.up(a));
  r.add("filters are principal", principal);

  bool meet_closed = true;
  for (auto f1 : filters)
    for (auto f2 : filters) meet_closed = meet_closed && family_has(filters, f1 & f2);
  r.add("filter intersections are filters", meet_closed);

  std::string mismatch;
  std::string fideal;
  for (auto f : filters) {
    if (f == s.carrier()) continue;
    bool const def = irreducible_among(filters, f, s.carrier());
    if (def != is_irreducible_char(s, f) && mismatch.empty()) mismatch = format_subset(f, labels);
    if (def != is_F_ideal(s, f, s.carrier() - f) && fideal.empty()) fideal = format_subset(f, labels);
  }
  r.add("irreducible by definition iff by characterization", mismatch.empty(), mismatch);
  r.add("irreducible iff complement is an F-ideal", fideal.empty(), fideal);

  r.add("order-ideals are principal downsets", all_order_ideals(s) == principal_downsets(s));

  std::string sep;
  for (auto f : filters)
    for (auto i : principal_downsets(s)) {
      if (f.intersects(i) || !sep.empty()) continue;
      try {
        auto const p = separate(s, f, i);
        if (!f.subset_of(p) || p.intersects(i)) sep = format_subset(f, labels) + " / " + format_subset(i, labels);
      } catch (Error const&) {
        sep = format_subset(f, labels) + " / " + format_subset(i, labels);
      }
    }
  r.add("every disjoint filter and order-ideal are separated", sep.empty(), sep);
  return r;
}

}  // namespace semidual
