#include "semidual/monotone_duality.hpp"

#include "semidual/canonical_extension.hpp"
#include "semidual/error.hpp"
#include "semidual/map_extensions.hpp"

namespace semidual {

namespace {

void require_s_set(SSpace const& x, Subset u) {
  if (!family_has(x.s_sets(), u)) throw Error(ErrorKind::NotInSX, format_subset(u, x.labels()) + " is not in S(X)");
}

Subset image_of(Subset s, std::vector<std::size_t> const& map) {
  Subset out;
  s.for_each([&](std::size_t x) { out = out.with(map[x]); });
  return out;
}

Subset preimage_of(Subset s, std::vector<std::size_t> const& map) {
  Subset out;
  for (std::size_t x = 0; x < map.size(); ++x)
    if (s.contains(map[x])) out = out.with(x);
  return out;
}

/// Z in the meet of L_U over the U in S(X) whose m_R contains x.
Family generated_neighbourhood(MSSpace const& x, std::size_t point) {
  Family out;
  for (auto z : x.saturated) {
    bool keep = true;
    for (auto u : x.space.s_sets())
      if (m_R(x, u).contains(point) && !z.intersects(u)) keep = false;
    if (keep) out.push_back(z);
  }
  return out;
}

}  // namespace

MSSpace make_ms_space(SSpace space, MultiRelation rel) {
  auto saturated = subbasic_saturated(space);
  if (rel.of_point.size() != space.size()) throw Error(ErrorKind::BadShape, "multirelation must list R(x) for every point");
  for (auto& row : rel.of_point) {
    canonicalize(row);
    for (auto z : row)
      if (!family_has(saturated, z))
        throw Error(ErrorKind::BadShape, format_subset(z, space.labels()) + " is not in Z(X)");
  }
  return MSSpace{std::move(space), std::move(saturated), std::move(rel)};
}

Family L_U(SSpace const& x, Family const& saturated, Subset u) {
  require_s_set(x, u);
  Family out;
  for (auto z : saturated)
    if (z.intersects(u)) out.push_back(z);
  return out;
}

Subset m_R(MSSpace const& x, Subset u) {
  require_s_set(x.space, u);
  Subset out;
  for (std::size_t p = 0; p < x.space.size(); ++p) {
    bool all = true;
    for (auto z : x.rel.of_point[p]) all = all && z.intersects(u);
    if (all) out = out.with(p);
  }
  return out;
}

Report check_ms_space(MSSpace const& x) {
  Report r;
  auto const& labels = x.space.labels();
  std::string closed;
  for (auto u : x.space.s_sets())
    if (!family_has(x.space.s_sets(), m_R(x, u)) && closed.empty()) closed = "U=" + format_subset(u, labels);
  r.add("m_R maps S(X) into S(X)", closed.empty(), closed);
  std::string generated;
  for (std::size_t p = 0; p < x.space.size() && generated.empty(); ++p)
    if (generated_neighbourhood(x, p) != x.rel.of_point[p]) generated = "x=" + labels[p];
  r.add("R(x) is the meet of the L_U above it", generated.empty(), generated);
  return r;
}

MonotoneDual build_R_m(MonotoneSemilattice const& s) {
  auto dual = dual_space(s.base);
  auto const zs = subbasic_saturated(dual.space);
  MultiRelation rel;
  for (auto p : dual.points) {
    Subset back;
    for (Element a = 0; a < s.base.size(); ++a)
      if (p.contains(s.op[a])) back = back.with(a);
    Family row;
    for (auto z : zs)
      if (!back.intersects(ideal_of(dual, z))) row.push_back(z);
    rel.of_point.push_back(row);
  }
  auto space = make_ms_space(dual.space, std::move(rel));
  return MonotoneDual{std::move(dual), std::move(space)};
}

MeetRelation make_relation(SSpace source, SSpace target, std::vector<Subset> image) {
  if (image.size() != source.size()) throw Error(ErrorKind::BadShape, "relation must list T(x) for every point");
  for (auto t : image)
    if (!t.subset_of(target.universe())) throw Error(ErrorKind::BadShape, "relation image outside the target");
  return MeetRelation{std::move(source), std::move(target), std::move(image)};
}

bool same_space(SSpace const& a, SSpace const& b) { return a.size() == b.size() && a.subbase() == b.subbase(); }

Subset box(MeetRelation const& t, Subset u) {
  Subset out;
  for (std::size_t x = 0; x < t.image.size(); ++x)
    if (t.image[x].subset_of(u)) out = out.with(x);
  return out;
}

Subset inverse_image(MeetRelation const& t, Subset w) {
  Subset out;
  for (std::size_t x = 0; x < t.image.size(); ++x)
    if (t.image[x].intersects(w)) out = out.with(x);
  return out;
}

Report meet_relation_check(MeetRelation const& t) {
  Report r;
  std::string boxes;
  for (auto u : t.target.s_sets())
    if (!family_has(t.source.s_sets(), box(t, u)) && boxes.empty()) boxes = "U=" + format_subset(u, t.target.labels());
  r.add("Box_T maps S(X2) into S(X1)", boxes.empty(), boxes);
  std::string images;
  for (std::size_t x = 0; x < t.image.size() && images.empty(); ++x)
    if (!family_has(t.target.subbasic_closed(), t.image[x])) images = "x=" + t.source.labels()[x];
  r.add("T(x) is an intersection of S(X2) members", images.empty(), images);
  return r;
}

bool is_meet_relation(MeetRelation const& t) { return meet_relation_check(t).ok(); }

MeetRelation specialization_relation(SSpace const& x) {
  std::vector<Subset> image;
  for (std::size_t p = 0; p < x.size(); ++p) image.push_back(x.point_closure(p));
  return MeetRelation{x, x, std::move(image)};
}

namespace {

void require_composable(MeetRelation const& t, MeetRelation const& r) {
  if (!same_space(r.target, t.source)) throw Error(ErrorKind::NotComposable, "target of R differs from source of T");
}

Subset relational_image(MeetRelation const& t, Subset s) {
  Subset out;
  s.for_each([&](std::size_t y) { out = out | t.image[y]; });
  return out;
}

}  // namespace

MeetRelation compose_star(MeetRelation const& t, MeetRelation const& r) {
  require_composable(t, r);
  std::vector<Subset> image;
  for (auto rx : r.image) {
    auto const composite = relational_image(t, rx);
    Subset hull = t.target.universe();
    for (auto u : t.target.s_sets())
      if (composite.subset_of(u)) hull = hull & u;
    image.push_back(hull);
  }
  return MeetRelation{r.source, t.target, std::move(image)};
}

MeetRelation compose_star_closure(MeetRelation const& t, MeetRelation const& r) {
  require_composable(t, r);
  std::vector<Subset> image;
  auto const& k = t.target.subbase();
  for (auto rx : r.image) {
    auto const composite = relational_image(t, rx);
    Subset outside;
    for (auto u : k)
      if (!u.intersects(composite)) outside = outside | u;
    image.push_back(t.target.universe() - outside);
  }
  return MeetRelation{r.source, t.target, std::move(image)};
}

MonotoneCheck monotone_meet_relation_check(MeetRelation const& t, MSSpace const& m1, MSSpace const& m2) {
  if (!same_space(t.source, m1.space) || !same_space(t.target, m2.space))
    throw Error(ErrorKind::NotComposable, "relation spaces differ from the mS-spaces");
  MonotoneCheck out{true, true, {}};
  auto const& labels2 = t.target.labels();
  for (auto u : t.target.s_sets()) {
    auto const boxed = box(t, u);
    if (!family_has(m1.space.s_sets(), boxed)) {
      out.diagram = false;
      if (out.witness.empty()) out.witness = "Box_T(" + format_subset(u, labels2) + ") outside S(X1)";
      continue;
    }
    if (m_R(m1, boxed) != box(t, m_R(m2, u))) {
      out.diagram = false;
      if (out.witness.empty()) out.witness = "diagram at U=" + format_subset(u, labels2);
    }
  }
  for (std::size_t x = 0; x < t.image.size(); ++x)
    for (auto u : t.target.s_sets()) {
      auto const w = u.complement(t.target.size());
      bool lhs = false;
      t.image[x].for_each([&](std::size_t y) { lhs = lhs || family_has(m2.rel.of_point[y], w); });
      bool const rhs = family_has(m1.rel.of_point[x], inverse_image(t, w));
      if (lhs != rhs) {
        out.pointwise = false;
        if (out.witness.empty())
          out.witness = "pointwise at x=" + t.source.labels()[x] + " U=" + format_subset(u, labels2);
      }
    }
  return out;
}

bool is_monotone_meet_relation(MeetRelation const& t, MSSpace const& m1, MSSpace const& m2) {
  auto const c = monotone_meet_relation_check(t, m1, m2);
  return c.diagram && c.pointwise;
}

MeetRelation relation_of_homomorphism(Homomorphism const& h) {
  auto const da = dual_space(h.source);
  auto const db = dual_space(h.target);
  std::vector<Subset> image;
  for (auto p : db.points) {
    Subset back;
    for (Element a = 0; a < h.source.size(); ++a)
      if (p.contains(h(a))) back = back.with(a);
    Subset row;
    for (std::size_t q = 0; q < da.points.size(); ++q)
      if (back.subset_of(da.points[q])) row = row.with(q);
    image.push_back(row);
  }
  return MeetRelation{db.space, da.space, std::move(image)};
}

BijectionRelations bijection_relations(SSpace const& x1, SSpace const& x2, std::vector<std::size_t> const& map) {
  if (map.size() != x1.size() || x1.size() != x2.size() || image_of(x1.universe(), map) != x2.universe())
    throw Error(ErrorKind::BadShape, "map is not a bijection");
  std::vector<Subset> r_image, t_image;
  for (std::size_t x = 0; x < x1.size(); ++x) r_image.push_back(x2.point_closure(map[x]));
  for (std::size_t q = 0; q < x2.size(); ++q) t_image.push_back(preimage_of(x2.point_closure(q), map));
  return BijectionRelations{MeetRelation{x1, x2, std::move(r_image)}, MeetRelation{x2, x1, std::move(t_image)}};
}

MSSpace transport(MSSpace const& m1, SSpace const& x2, std::vector<std::size_t> const& map) {
  if (!is_homeomorphism(m1.space, x2, map)) throw Error(ErrorKind::NotAnSSpace, "map does not carry K1 onto K2");
  MultiRelation rel{std::vector<Family>(x2.size())};
  for (std::size_t x = 0; x < m1.space.size(); ++x)
    for (auto z : m1.rel.of_point[x]) rel.of_point[map[x]].push_back(image_of(z, map));
  return make_ms_space(x2, std::move(rel));
}

ElementMap dual_operator(MSSpace const& x, DualAlgebra const& algebra) {
  ElementMap op;
  for (auto u : algebra.sets) {
    auto const m = m_R(x, u);
    auto const k = family_index(algebra.sets, m);
    if (k == algebra.sets.size()) throw Error(ErrorKind::NotInSX, "m_R(U) is not in S(X)");
    op.push_back(k);
  }
  return op;
}

Report duality_roundtrip(MSSpace const& x) {
  Report r;
  auto const ms = check_ms_space(x);
  r.merge(ms);
  if (!ms.ok()) return r;

  auto const h = H_X(x.space);
  auto const dual = build_R_m(validate_monotone(h.algebra.algebra, dual_operator(x, h.algebra)));
  r.add("H_X is a homeomorphism", is_homeomorphism(x.space, dual.dual.space, h.map));
  auto const moved = transport(x, dual.dual.space, h.map);
  r.add("H_X carries R onto R of the dual operator", moved.rel == dual.space.rel);

  auto const rel = bijection_relations(x.space, dual.space.space, h.map);
  r.add("R_f and T_f are monotone meet-relations",
        is_meet_relation(rel.r_f) && is_meet_relation(rel.t_f) && is_monotone_meet_relation(rel.r_f, x, dual.space) &&
            is_monotone_meet_relation(rel.t_f, dual.space, x));
  r.add("R_f * T_f and T_f * R_f are the specialization orders",
        compose_star(rel.r_f, rel.t_f).image == specialization_relation(dual.space.space).image &&
            compose_star(rel.t_f, rel.r_f).image == specialization_relation(x.space).image);
  return r;
}

Report duality_roundtrip(MonotoneSemilattice const& s) {
  Report r;
  auto const md = build_R_m(s);
  auto const& d = md.dual;
  r.merge(check_ms_space(md.space), "dual: ");

  std::string beta;
  for (Element a = 0; a < s.base.size() && beta.empty(); ++a)
    if (m_R(md.space, d.beta[a]) != d.beta[s.op[a]]) beta = s.base.label(a);
  r.add("beta(m a) = m_R(beta a)", beta.empty(), beta);

  MapExtension const ext(OrderMap{s.base, s.base, s.op});
  std::string pi;
  for (auto v : ext.source().elements)
    if (m_R(md.space, v) != ext.pi(v) && pi.empty()) pi = format_subset(v, d.space.labels());
  r.add("m_R agrees with m^pi", pi.empty(), pi);

  auto const alg = dual_semilattice(d.space);
  ElementMap iso;
  for (Element a = 0; a < s.base.size(); ++a) iso.push_back(family_index(alg.sets, d.beta[a]));
  bool is_iso = alg.sets.size() == s.base.size();
  try {
    auto const h = validate_homomorphism(s.base, alg.algebra, iso);
    is_iso = is_iso && is_onto(h) && is_monotone_homomorphism(h, s.op, dual_operator(md.space, alg));
  } catch (Error const&) {
    is_iso = false;
  }
  r.add("beta is an isomorphism onto <S(X(A)), m_R>", is_iso);

  r.merge(duality_roundtrip(md.space), "space: ");
  return r;
}

}  // namespace semidual
