#include "semidual/canonical_extension.hpp"

#include <optional>

#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"

namespace semidual {

namespace {

Subset image_union(DualSpace const& d, Subset elements) {
  Subset out;
  elements.for_each([&](Element a) { out = out | d.beta[a]; });
  return out;
}

/// Greatest member of the candidate family below the intersection.
std::optional<Subset> family_meet(CanonicalExtension const& ce, Family const& family) {
  auto const t = ce.meet(family);
  if (ce.contains(t)) return t;
  Subset below;
  for (auto g : ce.elements)
    if (g.subset_of(t)) below = below | g;
  if (ce.contains(below)) return below;
  return std::nullopt;
}

Family images(DualSpace const& d, Subset elements) {
  Family out;
  elements.for_each([&](Element a) { out.push_back(d.beta[a]); });
  return out;
}

bool dually_directed_in(Semilattice const& s, Subset x) {
  if (x.empty()) return false;
  bool ok = true;
  x.for_each([&](Element a) { x.for_each([&](Element b) { ok = ok && (s.down(a) & s.down(b)).intersects(x); }); });
  return ok;
}

}  // namespace

Subset alpha(DualSpace const& d, Subset ideal) {
  if (!is_order_ideal(d.algebra, ideal)) throw Error(ErrorKind::NotAnIdeal, "not an order-ideal");
  return d.space.universe() - image_union(d, ideal);
}

Subset ideal_of(DualSpace const& d, Subset z) {
  if (!family_has(subbasic_saturated(d.space), z))
    throw Error(ErrorKind::NotSaturated, "not a subbasic saturated set");
  Subset out;
  for (Element a = 0; a < d.algebra.size(); ++a)
    if (!d.beta[a].intersects(z)) out = out.with(a);
  return out;
}

bool is_point_upset(DualSpace const& d, Subset y) {
  bool ok = true;
  y.for_each([&](std::size_t p) {
    for (std::size_t q = 0; q < d.points.size(); ++q)
      if (d.points[p].subset_of(d.points[q]) && !y.contains(q)) ok = false;
  });
  return ok;
}

Subset CanonicalExtension::meet(Family const& family) const {
  return intersection_of(family, dual.space.universe());
}

Subset CanonicalExtension::join(Family const& family) const {
  auto const u = union_of(family);
  Subset out = dual.space.universe();
  for (auto g : elements)
    if (u.subset_of(g)) out = out & g;
  return out;
}

Subset lambda_closure(CanonicalExtension const& ce, Subset y) {
  if (!is_point_upset(ce.dual, y)) throw Error(ErrorKind::NotAnUpset, "not an upset of points");
  Subset out = ce.dual.space.universe();
  for (auto u : ce.saturated) {
    auto const complement = u.complement(ce.dual.space.size());
    if (y.subset_of(complement)) out = out & complement;
  }
  return out;
}

CanonicalExtension build_extension(Semilattice const& s) {
  CanonicalExtension ce{dual_space(s), {}, {}};
  ce.saturated = subbasic_saturated(ce.dual.space);
  Family complements;
  for (auto u : ce.saturated) complements.push_back(u.complement(ce.dual.space.size()));
  ce.elements = intersection_closure(complements, ce.dual.space.universe());
  return ce;
}

ClosedOpen closed_open_elements(CanonicalExtension const& ce) {
  auto const& s = ce.dual.algebra;
  ClosedOpen out;
  for (auto f : all_filters(s)) out.closed.push_back(ce.meet(images(ce.dual, f)));
  for (auto i : all_order_ideals(s)) out.open.push_back(ce.join(images(ce.dual, i)));
  canonicalize(out.closed);
  canonicalize(out.open);
  return out;
}

Report verify_dense(CanonicalExtension const& ce) {
  Report r;
  auto const& d = ce.dual;
  auto const& s = d.algebra;
  auto const& pl = d.space.labels();

  std::string embed;
  for (Element a = 0; a < s.size() && embed.empty(); ++a)
    if (!ce.contains(d.beta[a])) embed = "beta(" + s.label(a) + ")=" + format_subset(d.beta[a], pl) + " missing";
  r.add("embedding lands in E", embed.empty(), embed);
  r.add("E contains X(A)", ce.contains(d.space.universe()));

  Family closed, open;
  std::string missing;
  for (auto f : all_filters(s)) {
    auto const m = family_meet(ce, images(d, f));
    if (m) {
      closed.push_back(*m);
    } else if (missing.empty()) {
      missing = "meet of beta" + format_subset(f, s.labels());
    }
  }
  for (auto i : all_order_ideals(s)) open.push_back(ce.join(images(d, i)));
  r.add("closed elements exist", missing.empty(), missing);

  std::string from_open, from_closed;
  for (auto x : ce.elements) {
    Family above, below;
    for (auto o : open)
      if (x.subset_of(o)) above.push_back(o);
    for (auto k : closed)
      if (k.subset_of(x)) below.push_back(k);
    auto const m = family_meet(ce, above);
    if ((!m || *m != x) && from_open.empty()) from_open = format_subset(x, pl);
    if (ce.join(below) != x && from_closed.empty()) from_closed = format_subset(x, pl);
  }
  r.add("every element is a meet of open elements", from_open.empty(), from_open);
  r.add("every element is a join of closed elements", from_closed.empty(), from_closed);
  return r;
}

Report verify_compact(CanonicalExtension const& ce) {
  Report r;
  auto const& d = ce.dual;
  auto const& s = d.algebra;
  std::vector<Subset> downward, upward;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.size()); ++bits) {
    Subset x{bits};
    if (dually_directed_in(s, x)) downward.push_back(x);
    if (is_directed(s, x)) upward.push_back(x);
  }
  std::string witness;
  for (auto dd : downward) {
    auto const lower = family_meet(ce, images(d, dd));
    if (!lower) {
      if (witness.empty()) witness = "no meet for D=" + format_subset(dd, s.labels());
      continue;
    }
    for (auto uu : upward) {
      if (!lower->subset_of(ce.join(images(d, uu)))) continue;
      bool found = false;
      dd.for_each([&](Element x) { found = found || s.up(x).intersects(uu); });
      if (!found && witness.empty())
        witness = "D=" + format_subset(dd, s.labels()) + " U=" + format_subset(uu, s.labels());
    }
  }
  r.add("compact", witness.empty(), witness);
  return r;
}

GouveiaPriestley gouveia_priestley(Semilattice const& s, std::size_t max_filters) {
  GouveiaPriestley gp;
  gp.filters = all_filters(s);
  auto const nf = gp.filters.size();
  if (nf > max_filters || nf > Subset::max_size)
    throw Error(ErrorKind::CapExceeded, "Fi(A) has " + std::to_string(nf) + " filters, above the cap");
  auto const all = Subset::full(nf);

  MeetTable table(nf, std::vector<Element>(nf));
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j) table[i][j] = family_index(gp.filters, gp.filters[i] & gp.filters[j]);
  auto const fi = validate_semilattice(table, family_index(gp.filters, s.carrier()));
  gp.second_filters = all_filters(fi);

  gp.e.assign(s.size(), Subset{});
  for (std::size_t k = 0; k < nf; ++k) gp.filters[k].for_each([&](Element a) { gp.e[a] = gp.e[a].with(k); });

  auto const ideals = all_order_ideals(s);
  auto directed_join = [&](Subset ideal) {
    Subset out;
    for (std::size_t k = 0; k < nf; ++k)
      if (gp.filters[k].intersects(ideal)) out = out.with(k);
    return out;
  };
  Family joins;
  for (auto i : ideals) joins.push_back(directed_join(i));
  gp.c = intersection_closure(joins, all);

  auto const d = dual_space(s);
  auto const ce = build_extension(s);
  auto i_map = [&](Subset x) {
    Subset out;
    for (std::size_t p = 0; p < d.points.size(); ++p)
      if (x.contains(family_index(gp.filters, d.points[p]))) out = out.with(p);
    return out;
  };
  auto j_map = [&](Subset y) {
    Subset out = all;
    for (auto i : ideals)
      if (y.subset_of(alpha(d, i).complement(d.points.size()))) out = out & directed_join(i);
    return out;
  };
  for (auto x : gp.c) gp.i_of_c.push_back(i_map(x));

  auto& r = gp.report;
  bool e_filters = true;
  for (auto x : gp.e) e_filters = e_filters && family_has(gp.second_filters, x);
  r.add("e(a) lies in Fi^2(A)", e_filters);
  bool joins_in = true;
  for (auto x : joins) joins_in = joins_in && family_has(gp.second_filters, x);
  r.add("directed joins of e-images lie in Fi^2(A)", joins_in);

  std::string ie;
  for (Element a = 0; a < s.size() && ie.empty(); ++a)
    if (i_map(gp.e[a]) != d.beta[a]) ie = s.label(a);
  r.add("i(e(a)) = beta(a)", ie.empty(), ie);

  r.add("i maps C onto E", canonical(gp.i_of_c) == ce.elements);
  std::string inverse;
  for (auto x : gp.c)
    if (j_map(i_map(x)) != x && inverse.empty()) inverse = "j(i(X)) != X";
  for (auto y : ce.elements) {
    if (!family_has(gp.c, j_map(y)) && inverse.empty()) inverse = "j(Y) outside C";
    if (i_map(j_map(y)) != y && inverse.empty()) inverse = "i(j(Y)) != Y at " + format_subset(y, d.space.labels());
  }
  r.add("i and j are mutually inverse", inverse.empty(), inverse);

  bool order = true;
  for (auto x : gp.c)
    for (auto x2 : gp.c) order = order && (x.subset_of(x2) == i_map(x).subset_of(i_map(x2)));
  r.add("i is an order isomorphism", order);

  std::string ideal_side, filter_side, formula;
  for (auto i : ideals)
    if (i_map(directed_join(i)) != alpha(d, i).complement(d.points.size()) && ideal_side.empty())
      ideal_side = format_subset(i, s.labels());
  for (auto f : gp.filters) {
    Subset meet = all;
    f.for_each([&](Element a) { meet = meet & gp.e[a]; });
    if (i_map(meet) != phi(d, f) && filter_side.empty()) filter_side = format_subset(f, s.labels());
  }
  for (auto x : gp.c) {
    Subset via = d.space.universe();
    for (auto i : ideals)
      if (x.subset_of(directed_join(i))) via = via & alpha(d, i).complement(d.points.size());
    if (via != i_map(x) && formula.empty()) formula = format_subset(x);
  }
  r.add("i of a directed join is the complement of alpha", ideal_side.empty(), ideal_side);
  r.add("i of a filter meet is phi", filter_side.empty(), filter_side);
  r.add("i(X) is the meet of the alpha complements above", formula.empty(), formula);
  return gp;
}

Report canonical_extension_laws(Semilattice const& s) {
  Report r;
  auto const ce = build_extension(s);
  auto const& d = ce.dual;
  auto const n = d.space.size();
  auto const& pl = d.space.labels();
  auto const ideals = all_order_ideals(s);
  auto const filters = all_filters(s);

  Family alphas;
  std::string roundtrip;
  for (auto i : ideals) {
    auto const z = alpha(d, i);
    alphas.push_back(z);
    if (ideal_of(d, z) != i && roundtrip.empty()) roundtrip = format_subset(i, s.labels());
    for (auto i2 : ideals)
      if (i.subset_of(i2) != alpha(d, i2).subset_of(z) && roundtrip.empty())
        roundtrip = "order at " + format_subset(i, s.labels()) + " " + format_subset(i2, s.labels());
  }
  for (auto z : ce.saturated)
    if (alpha(d, ideal_of(d, z)) != z && roundtrip.empty()) roundtrip = format_subset(z, pl);
  r.add("Z(X(A)) is the image of alpha", canonical(alphas) == ce.saturated);
  r.add("alpha and I_A are inverse dual isomorphisms", roundtrip.empty(), roundtrip);

  std::string join_witness;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b)
      if (auto j = s.join(a, b); j && ce.join({d.beta[a], d.beta[b]}) != d.beta[*j] && join_witness.empty())
        join_witness = s.label(a) + " " + s.label(b);
  r.add("beta preserves existing binary joins", join_witness.empty(), join_witness);

  std::string directed;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.size()); ++bits) {
    Subset x{bits};
    if (!is_directed(s, x)) continue;
    if (ce.join(images(d, x)) != image_union(d, x) && directed.empty()) directed = format_subset(x, s.labels());
  }
  for (auto u : ce.saturated)
    if (u.complement(n) != image_union(d, ideal_of(d, u)) && directed.empty()) directed = format_subset(u, pl);
  r.add("directed joins of beta-images are unions", directed.empty(), directed);

  std::string compactness;
  for (auto y : d.space.subbasic_closed())
    for (auto z : ce.saturated)
      if ((psi(d, y).intersects(ideal_of(d, z))) != !y.intersects(z) && compactness.empty())
        compactness = format_subset(y, pl) + " " + format_subset(z, pl);
  for (auto f : filters)
    for (auto i : ideals)
      if ((!phi(d, f).intersects(alpha(d, i))) != f.intersects(i) && compactness.empty())
        compactness = format_subset(f, s.labels()) + " " + format_subset(i, s.labels());
  r.add("psi(Y) meets I_A(Z) iff Y misses Z", compactness.empty(), compactness);

  std::string closure;
  Family upsets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    if (is_point_upset(d, Subset{bits})) upsets.push_back(Subset{bits});
  for (auto y : upsets) {
    auto const ly = lambda_closure(ce, y);
    if ((!y.subset_of(ly) || lambda_closure(ce, ly) != ly || !ce.contains(ly)) && closure.empty())
      closure = format_subset(y, pl);
    for (auto y2 : upsets)
      if (y.subset_of(y2) && !ly.subset_of(lambda_closure(ce, y2)) && closure.empty())
        closure = "monotone at " + format_subset(y, pl);
  }
  r.add("lambda is a closure operator on upsets", closure.empty(), closure);

  std::string lattice;
  for (auto x : ce.elements) {
    if (!is_point_upset(d, x) && lattice.empty()) lattice = "non-upset " + format_subset(x, pl);
    for (auto y : ce.elements) {
      if (!ce.contains(x & y) && lattice.empty()) lattice = "meet of " + format_subset(x, pl);
      auto const j = ce.join({x, y});
      if ((j != lambda_closure(ce, x | y) || !ce.contains(j)) && lattice.empty()) lattice = "join of " + format_subset(x, pl);
    }
  }
  if (!ce.contains(lambda_closure(ce, Subset{})) && lattice.empty()) lattice = "no bottom";
  r.add("E is a complete lattice with join lambda of the union", lattice.empty(), lattice);

  r.merge(verify_dense(ce), "dense: ");
  r.merge(verify_compact(ce), "compact: ");

  auto const co = closed_open_elements(ce);
  r.add("closed elements are C_K", co.closed == d.space.subbasic_closed());
  Family zc;
  for (auto z : ce.saturated) zc.push_back(z.complement(n));
  r.add("open elements are complements of Z", co.open == canonical(zc));
  r.add("E collapses to C_K", ce.elements == d.space.subbasic_closed() && ce.elements.size() == s.size());
  return r;
}

}  // namespace semidual
