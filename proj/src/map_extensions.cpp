#include "semidual/map_extensions.hpp"

#include <string>

#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"

namespace semidual {

namespace {

std::string pair_label(Semilattice const& s, Element a, Element b) { return s.label(a) + " " + s.label(b); }

}  // namespace

OrderMap validate_order_map(Semilattice source, Semilattice target, ElementMap map) {
  if (map.size() != source.size()) throw Error(ErrorKind::BadShape, "map size differs from source size");
  for (Element a = 0; a < map.size(); ++a)
    if (map[a] >= target.size()) throw Error(ErrorKind::BadShape, "image out of range", {a});
  for (Element a = 0; a < source.size(); ++a)
    for (Element b = 0; b < source.size(); ++b)
      if (source.leq(a, b) && !target.leq(map[a], map[b]))
        throw Error(ErrorKind::NotOrderPreserving, "order not preserved at " + pair_label(source, a, b), {a, b});
  return OrderMap{std::move(source), std::move(target), std::move(map)};
}

Subset preimage(OrderMap const& f, Subset filter) {
  Subset out;
  for (Element a = 0; a < f.source.size(); ++a)
    if (filter.contains(f(a))) out = out.with(a);
  return out;
}

PiRelation build_R_f(OrderMap const& f) {
  auto const da = dual_space(f.source);
  auto const db = dual_space(f.target);
  auto const zs = subbasic_saturated(da.space);
  PiRelation r;
  for (auto p : db.points) {
    Family row;
    auto const back = preimage(f, p);
    for (auto z : zs)
      if (!back.intersects(ideal_of(da, z))) row.push_back(z);
    r.of_point.push_back(canonical(row));
  }
  return r;
}

SigmaRelation build_G_f(OrderMap const& f) {
  auto const da = dual_space(f.source);
  auto const db = dual_space(f.target);
  SigmaRelation g;
  for (auto p : db.points) {
    Family row;
    auto const back = preimage(f, p);
    for (auto y : da.space.subbasic_closed())
      if (psi(da, y).subset_of(back)) row.push_back(y);
    g.of_point.push_back(canonical(row));
  }
  return g;
}

MapExtension::MapExtension(OrderMap f)
    : f_(std::move(f)),
      a_(build_extension(f_.source)),
      b_(build_extension(f_.target)),
      a_co_(closed_open_elements(a_)),
      r_(build_R_f(f_)),
      g_(build_G_f(f_)) {}

void MapExtension::require(Subset v) const {
  if (!a_.contains(v))
    throw Error(ErrorKind::NotInExtension, format_subset(v, a_.dual.space.labels()) + " is not in E(X(A))");
}

std::array<Subset, 3> MapExtension::sigma_routes(Subset v) const {
  require(v);
  auto const& s = f_.source;
  auto const& beta_b = b_.dual.beta;

  // Lattice formula over the closed elements of E(X(A)).
  Family lattice_terms;
  for (auto x : a_co_.closed) {
    if (!x.subset_of(v)) continue;
    Family above;
    for (Element p = 0; p < s.size(); ++p)
      if (x.subset_of(a_.embed(p))) above.push_back(beta_b[f_(p)]);
    lattice_terms.push_back(b_.meet(above));
  }

  // Topological formula over C_K(X(A)) through psi.
  Family topo_terms;
  for (auto y : a_.dual.space.subbasic_closed()) {
    if (!y.subset_of(v)) continue;
    Family above;
    psi(a_.dual, y).for_each([&](Element a) { above.push_back(beta_b[f_(a)]); });
    topo_terms.push_back(b_.meet(above));
  }

  // G_f presentation.
  Subset via_g;
  for (auto y : a_.dual.space.subbasic_closed()) {
    if (!y.subset_of(v)) continue;
    for (std::size_t p = 0; p < g_.of_point.size(); ++p)
      if (family_has(g_.of_point[p], y)) via_g = via_g.with(p);
  }
  return {b_.join(lattice_terms), b_.join(topo_terms), lambda_closure(b_, via_g)};
}

std::array<Subset, 4> MapExtension::pi_routes(Subset v) const {
  require(v);
  auto const& s = f_.source;
  auto const& beta_b = b_.dual.beta;
  auto const na = a_.dual.space.size();
  auto const nb = b_.dual.space.size();

  // Lattice formula over the open elements of E(X(A)).
  Family lattice_terms;
  for (auto y : a_co_.open) {
    if (!v.subset_of(y)) continue;
    Family below;
    for (Element p = 0; p < s.size(); ++p)
      if (a_.embed(p).subset_of(y)) below.push_back(beta_b[f_(p)]);
    lattice_terms.push_back(b_.join(below));
  }

  // Topological formula and the preimage formula over Z(X(A)).
  Family topo_terms, preimage_terms;
  for (auto z : a_.saturated) {
    if (!z.subset_of(v.complement(na))) continue;
    auto const zc = z.complement(na);
    Family below;
    for (Element a = 0; a < s.size(); ++a)
      if (a_.embed(a).subset_of(zc)) below.push_back(beta_b[f_(a)]);
    topo_terms.push_back(b_.join(below));
    auto const ideal = ideal_of(a_.dual, z);
    Subset hit;
    for (std::size_t p = 0; p < nb; ++p)
      if (preimage(f_, b_.dual.points[p]).intersects(ideal)) hit = hit.with(p);
    preimage_terms.push_back(hit);
  }
  return {b_.meet(lattice_terms), b_.meet(topo_terms), b_.meet(preimage_terms), pi(v)};
}

Subset MapExtension::sigma(Subset v) const { return sigma_routes(v)[0]; }

Subset MapExtension::pi(Subset v) const {
  require(v);
  Subset out;
  for (std::size_t p = 0; p < r_.of_point.size(); ++p) {
    bool all = true;
    for (auto z : r_.of_point[p]) all = all && z.intersects(v);
    if (all) out = out.with(p);
  }
  return out;
}

Subset sigma_ext(OrderMap const& f, Subset v) { return MapExtension(f).sigma(v); }
Subset pi_ext(OrderMap const& f, Subset v) { return MapExtension(f).pi(v); }

Report extension_laws(OrderMap const& f) {
  Report r;
  MapExtension const ext(f);
  auto const& a = ext.source();
  auto const& b = ext.target();
  auto const& la = a.dual.space.labels();
  auto const co_a = closed_open_elements(a);
  auto const co_b = closed_open_elements(b);

  std::string restrict;
  for (Element x = 0; x < f.source.size(); ++x) {
    auto const want = b.embed(f(x));
    if ((ext.sigma(a.embed(x)) != want || ext.pi(a.embed(x)) != want) && restrict.empty()) restrict = f.source.label(x);
  }
  r.add("both extensions restrict to beta after f", restrict.empty(), restrict);

  std::string sigma_agree, pi_agree, order, equal, closed, open, monotone;
  for (auto v : a.elements) {
    auto const sr = ext.sigma_routes(v);
    auto const pr = ext.pi_routes(v);
    if ((sr[0] != sr[1] || sr[0] != sr[2]) && sigma_agree.empty()) sigma_agree = format_subset(v, la);
    if ((pr[0] != pr[1] || pr[0] != pr[2] || pr[0] != pr[3]) && pi_agree.empty()) pi_agree = format_subset(v, la);
    if (!sr[0].subset_of(pr[0]) && order.empty()) order = format_subset(v, la);
    bool const special = family_has(co_a.closed, v) || family_has(co_a.open, v);
    if (special && sr[0] != pr[0] && equal.empty()) equal = format_subset(v, la);
    if (family_has(co_a.closed, v) && !family_has(co_b.closed, sr[0]) && closed.empty()) closed = format_subset(v, la);
    if (family_has(co_a.open, v) && !family_has(co_b.open, pr[0]) && open.empty()) open = format_subset(v, la);
    for (auto w : a.elements)
      if (v.subset_of(w) && (!sr[0].subset_of(ext.sigma(w)) || !pr[0].subset_of(ext.pi(w))) && monotone.empty())
        monotone = format_subset(v, la) + " " + format_subset(w, la);
  }
  r.add("sigma formulas agree", sigma_agree.empty(), sigma_agree);
  r.add("pi formulas agree", pi_agree.empty(), pi_agree);
  r.add("sigma lies below pi", order.empty(), order);
  r.add("sigma equals pi on closed and open elements", equal.empty(), equal);
  r.add("sigma maps closed to closed", closed.empty(), closed);
  r.add("pi maps open to open", open.empty(), open);
  r.add("both extensions preserve order", monotone.empty(), monotone);

  std::string directed;
  for (auto z : a.saturated) {
    Family images;
    ideal_of(a.dual, z).for_each([&](Element x) { images.push_back(b.embed(f(x))); });
    for (auto u : images)
      for (auto w : images) {
        bool bounded = false;
        for (auto t : images) bounded = bounded || (u | w).subset_of(t);
        if (!bounded && directed.empty()) directed = format_subset(z, la);
      }
  }
  r.add("beta_B f of I_A(Z) is directed", directed.empty(), directed);

  std::string g_sigma;
  for (auto y : a.dual.space.subbasic_closed()) {
    Subset inverse;
    for (std::size_t p = 0; p < ext.g().of_point.size(); ++p)
      if (family_has(ext.g().of_point[p], y)) inverse = inverse.with(p);
    if (inverse != ext.sigma(y) && g_sigma.empty()) g_sigma = format_subset(y, la);
  }
  r.add("G_f inverse image is sigma on closed elements", g_sigma.empty(), g_sigma);
  return r;
}

}  // namespace semidual
