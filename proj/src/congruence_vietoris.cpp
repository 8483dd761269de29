#include "semidual/congruence_vietoris.hpp"

#include <algorithm>
#include <map>

#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"

namespace semidual {

namespace {

bool family_less(Family const& a, Family const& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
}

std::string format_family(Family const& family, std::vector<std::string> const& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < family.size(); ++k) out += (k ? "," : "") + format_subset(family[k], labels);
  return out + "}";
}

/// Classes keyed by an arbitrary value, numbered by first occurrence.
template <class Key>
Congruence congruence_by_key(std::vector<Key> const& keys) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> class_of;
  for (auto const& k : keys) class_of.push_back(ids.emplace(k, ids.size()).first->second);
  return Congruence(std::move(class_of));
}

/// theta on S(X): U ~ V iff (U^c)^-_F = (V^c)^-_F.
Congruence kernel_on_s_sets(SSpace const& x, Family const& sets, Family const& members) {
  std::vector<std::uint64_t> keys;
  for (auto u : sets) keys.push_back(lower_set(members, u.complement(x.size())).bits());
  return congruence_by_key(keys);
}

Family union_of_rows(MSSpace const& x, Subset y) {
  Family out;
  y.for_each([&](std::size_t p) { out.insert(out.end(), x.rel.of_point[p].begin(), x.rel.of_point[p].end()); });
  return canonical(out);
}

struct IncreaseWitness {
  std::size_t u = 0;
  std::size_t v = 0;
};

std::optional<IncreaseWitness> increase_violation(SSpace const& base, Family const& members, Family const& h) {
  auto const& k = base.subbase();
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!family_has(h, k[i])) continue;
    auto const lower_u = lower_set(members, k[i]);
    for (std::size_t j = 0; j < k.size(); ++j)
      if (!family_has(h, k[j]) && lower_u.subset_of(lower_set(members, k[j]))) return IncreaseWitness{i, j};
  }
  return std::nullopt;
}

bool family_includes(Family const& big, Family const& small) {
  return std::all_of(small.begin(), small.end(), [&](Subset x) { return family_has(big, x); });
}

bool relation_refines(Congruence const& a, Congruence const& b) { return a.refines(b); }

}  // namespace

bool is_one_to_one(MeetRelation const& t) {
  for (std::size_t x = 0; x < t.source.size(); ++x)
    for (auto u : t.source.s_sets()) {
      if (u.contains(x)) continue;
      bool found = false;
      for (auto v : t.target.s_sets()) {
        auto const b = box(t, v);
        found = found || (u.subset_of(b) && !b.contains(x));
      }
      if (!found) return false;
    }
  return true;
}

bool box_is_onto(MeetRelation const& t) {
  Family image;
  for (auto v : t.target.s_sets()) image.push_back(box(t, v));
  auto const c = canonical(image);
  return std::all_of(t.source.s_sets().begin(), t.source.s_sets().end(), [&](Subset u) { return family_has(c, u); });
}

Subset lower_set(Family const& members, Subset u) {
  Subset out;
  for (std::size_t k = 0; k < members.size(); ++k)
    if (members[k].intersects(u)) out = out.with(k);
  return out;
}

VietorisFamily make_family(SSpace base, Family members) {
  canonicalize(members);
  for (auto y : members) {
    if (y.empty()) throw Error(ErrorKind::NotAVietorisFamily, "members must be nonempty");
    if (!family_has(base.subbasic_closed(), y))
      throw Error(ErrorKind::NotAVietorisFamily, format_subset(y, base.labels()) + " is not subbasic closed");
  }
  if (members.size() > Subset::max_size) throw Error(ErrorKind::CapExceeded, "too many members");
  Family m;
  for (auto u : base.subbase()) m.push_back(lower_set(members, u));
  std::vector<std::string> labels;
  for (auto y : members) labels.push_back(format_subset(y, base.labels()));
  SSpace space(members.size(), std::move(m), std::move(labels));
  return VietorisFamily{std::move(base), std::move(members), std::move(space)};
}

Report check_vietoris_family(VietorisFamily const& f, SSpaceCheckOptions const& options) {
  return check_s_space(f.space, options);
}

Report check_vietoris_family(DualSpace const& d, VietorisFamily const& f) {
  auto r = check_vietoris_family(f);
  Family via_filters;
  for (auto g : all_filters(d.algebra)) {
    auto const phi_g = phi(d, g);
    Subset y;
    for (std::size_t k = 0; k < f.members.size(); ++k)
      if (f.members[k].subset_of(phi_g)) y = y.with(k);
    via_filters.push_back(y);
  }
  r.add("subbasic closed sets of the family come from filters", canonical(via_filters) == f.space.subbasic_closed());
  return r;
}

bool is_vietoris_family(VietorisFamily const& f) { return check_vietoris_family(f).ok(); }

VietorisFamily family_of_relation(MeetRelation const& t) {
  if (!is_one_to_one(t)) throw Error(ErrorKind::NotOneToOne, "relation is not one-to-one");
  return make_family(t.target, Family(t.image.begin(), t.image.end()));
}

Subset H_a(DualSpace const& d, Family const& members, Element a) {
  return lower_set(members, d.beta[a].complement(d.points.size()));
}

MeetRelation relation_of_family(VietorisFamily const& f) {
  if (!is_vietoris_family(f)) throw Error(ErrorKind::NotAVietorisFamily, "<F, M_F> is not an S-space");
  return MeetRelation{f.space, f.base, std::vector<Subset>(f.members.begin(), f.members.end())};
}

Congruence theta_of_family(DualSpace const& d, VietorisFamily const& f) {
  if (!is_vietoris_family(f)) throw Error(ErrorKind::NotAVietorisFamily, "<F, M_F> is not an S-space");
  std::vector<std::uint64_t> keys;
  for (Element a = 0; a < d.algebra.size(); ++a) keys.push_back(H_a(d, f.members, a).bits());
  return congruence_by_key(keys);
}

VietorisFamily family_of_theta(Semilattice const& s, Congruence const& theta, ElementMap const* op) {
  validate_congruence(s, theta, op);
  auto const q = quotient(s, theta, op);
  auto const rq = relation_of_homomorphism(q.projection);
  return make_family(rq.target, Family(rq.image.begin(), rq.image.end()));
}

std::vector<Congruence> all_congruences(Semilattice const& s, ElementMap const* op) {
  std::vector<Congruence> out;
  for_each_partition(s.size(), [&](std::vector<std::size_t> const& labels) {
    Congruence theta(labels);
    if (is_congruence(s, theta, op)) out.push_back(std::move(theta));
  });
  return out;
}

bool is_M_increasing(SSpace const& base, Family const& members, Family const& h) {
  return !increase_violation(base, members, canonical(h));
}

Report monotone_family_check(MSSpace const& x, VietorisFamily const& f) {
  Report r;
  if (!same_space(x.space, f.base)) throw Error(ErrorKind::NotComposable, "family lives on a different space");
  std::string witness;
  auto const& k = x.space.subbase();
  for (auto y : f.members) {
    auto const v = increase_violation(x.space, f.members, union_of_rows(x, y));
    if (v && witness.empty())
      witness = "Y=" + format_subset(y, x.space.labels()) + " U=" + format_subset(k[v->u], x.space.labels()) +
                " V=" + format_subset(k[v->v], x.space.labels());
  }
  r.add("R[Y] is M_F-increasing", witness.empty(), witness);
  return r;
}

void require_monotone_family(MSSpace const& x, VietorisFamily const& f) {
  for (auto y : f.members)
    if (auto v = increase_violation(x.space, f.members, union_of_rows(x, y)))
      throw Error(ErrorKind::NotMIncreasing, "R[Y] is not M_F-increasing at " + format_subset(y, x.space.labels()),
                  {v->u, v->v});
}

MSSpace induced_multirelation(MonotoneDual const& d, VietorisFamily const& f) {
  auto const nf = f.members.size();
  auto const zs = subbasic_saturated(f.space);
  MultiRelation rel;
  for (auto y : f.members) {
    auto const rm = union_of_rows(d.space, y);
    Family row;
    for (auto z : zs) {
      bool keep = true;
      for (Element a = 0; a < d.dual.algebra.size(); ++a) {
        auto const ca = d.dual.beta[a].complement(d.dual.points.size());
        if (!family_has(rm, ca) && !z.intersects(H_a(d.dual, f.members, a).complement(nf))) keep = false;
      }
      if (keep) row.push_back(z);
    }
    rel.of_point.push_back(row);
  }
  return make_ms_space(f.space, std::move(rel));
}

namespace {

VietorisLattice build_lattice(SSpace const& x, MSSpace const* mx, std::size_t max_members) {
  Family candidates;
  for (auto y : x.subbasic_closed())
    if (!y.empty()) candidates.push_back(y);
  if (candidates.size() > max_members)
    throw Error(ErrorKind::CapExceeded, std::to_string(candidates.size()) + " candidate members, above the cap");

  VietorisLattice out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << candidates.size()); ++bits) {
    Family members;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if ((bits >> k) & 1U) members.push_back(candidates[k]);
    auto const vf = make_family(x, members);
    if (!is_vietoris_family(vf)) continue;
    if (mx && !monotone_family_check(*mx, vf).ok()) continue;
    out.families.push_back(vf.members);
  }
  std::sort(out.families.begin(), out.families.end(), family_less);

  out.algebra = dual_semilattice(x);
  std::optional<ElementMap> op;
  if (mx) op = dual_operator(*mx, out.algebra);
  ElementMap const* op_ptr = op ? &*op : nullptr;
  for (auto const& f : out.families) out.thetas.push_back(kernel_on_s_sets(x, out.algebra.sets, f));

  auto const n = out.families.size();
  auto const& k = x.subbase();
  out.leq.assign(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto u : k)
        for (auto v : k)
          if (lower_set(out.families[j], u) == lower_set(out.families[j], v) &&
              lower_set(out.families[i], u) != lower_set(out.families[i], v))
            out.leq[i][j] = false;

  auto& r = out.report;
  bool partial = true;
  for (std::size_t i = 0; i < n; ++i) {
    partial = partial && out.leq[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && out.leq[i][j] && out.leq[j][i]) partial = false;
      for (std::size_t l = 0; l < n; ++l)
        if (out.leq[i][j] && out.leq[j][l] && !out.leq[i][l]) partial = false;
    }
  }
  r.add("the order on V(X) is a partial order", partial);

  bool congruences = true;
  for (auto const& t : out.thetas) congruences = congruences && is_congruence(out.algebra.algebra, t, op_ptr);
  r.add("theta_F is a congruence of S(X)", congruences);

  auto con = all_congruences(out.algebra.algebra, op_ptr);
  auto thetas = out.thetas;
  std::sort(con.begin(), con.end());
  std::sort(thetas.begin(), thetas.end());
  r.add("F to theta_F is a bijection onto Con(S(X))", con == thetas, std::to_string(n) + " families, " +
                                                                         std::to_string(con.size()) + " congruences");

  std::string reverse;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.leq[i][j] != relation_refines(out.thetas[j], out.thetas[i]) && reverse.empty())
        reverse = format_family(out.families[i], x.labels()) + " " + format_family(out.families[j], x.labels());
  r.add("F1 <= F2 iff theta_F2 is contained in theta_F1", reverse.empty(), reverse);

  auto index_of = [&](Congruence const& t) {
    return static_cast<std::size_t>(std::find(out.thetas.begin(), out.thetas.end(), t) - out.thetas.begin());
  };
  std::string bounds;
  for (std::size_t i = 0; i < n && bounds.empty(); ++i)
    for (std::size_t j = 0; j < n && bounds.empty(); ++j) {
      auto const join = index_of(congruence_meet(out.thetas[i], out.thetas[j]));
      auto const meet = index_of(congruence_join(out.algebra.algebra, out.thetas[i], out.thetas[j], op_ptr));
      if (join == n || meet == n) {
        bounds = "transported bound is missing";
        break;
      }
      for (std::size_t l = 0; l < n; ++l) {
        bool const upper = out.leq[i][l] && out.leq[j][l];
        bool const lower = out.leq[l][i] && out.leq[l][j];
        if (upper != out.leq[join][l] || lower != out.leq[l][meet]) bounds = "bounds at pair " + std::to_string(i) + "," + std::to_string(j);
      }
    }
  r.add("V(X) is a lattice with bounds transported from Con(S(X))", bounds.empty(), bounds);
  return out;
}

}  // namespace

VietorisLattice vietoris_lattice(SSpace const& x, std::size_t max_members) { return build_lattice(x, nullptr, max_members); }

VietorisLattice vietoris_lattice(MSSpace const& x, std::size_t max_members) { return build_lattice(x.space, &x, max_members); }

Report induced_homeomorphism_check(Homomorphism const& h, ElementMap const& m, ElementMap const& n) {
  Report r;
  bool const premise = is_onto(h) && is_monotone_homomorphism(h, m, n);
  r.add("h is an onto monotone homomorphism", premise);
  if (!premise) return r;

  auto const ma = build_R_m(validate_monotone(h.source, m));
  auto const nb = build_R_m(validate_monotone(h.target, n));
  auto const rh = relation_of_homomorphism(h);
  r.add("R_h is one-to-one", is_one_to_one(rh));
  auto const vf = family_of_relation(rh);
  std::vector<std::size_t> lambda;
  for (auto y : rh.image) lambda.push_back(family_index(vf.members, y));
  bool const homeo = is_homeomorphism(nb.space.space, vf.space, lambda);
  r.add("lambda is a homeomorphism onto <F, M>", homeo);
  if (!homeo) return r;

  auto const t = transport(nb.space, vf.space, lambda);
  r.merge(check_ms_space(t), "transported: ");
  std::string witness;
  for (std::size_t p = 0; p < rh.image.size(); ++p)
    for (Element a = 0; a < h.source.size(); ++a) {
      auto const ca = ma.dual.beta[a].complement(ma.dual.points.size());
      bool lhs = false;
      rh.image[p].for_each([&](std::size_t q) { lhs = lhs || family_has(ma.space.rel.of_point[q], ca); });
      bool const rhs = family_has(t.rel.of_point[lambda[p]], H_a(ma.dual, vf.members, a));
      if (lhs != rhs && witness.empty()) witness = nb.dual.space.labels()[p] + " " + h.source.label(a);
    }
  r.add("beta(a)^c in R_m[R_h(P)] iff H_a in T(R_h(P))", witness.empty(), witness);
  r.merge(monotone_family_check(ma.space, vf), "F_{R_h}: ");
  r.add("induced multirelation equals the transported one", induced_multirelation(ma, vf).rel == t.rel);
  return r;
}

Family sigma_of(Semilattice const& s, Congruence const& theta) {
  Family out;
  for (auto f : all_filters(s)) {
    bool closed = true;
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y)
        if (theta.related(x, y) && f.contains(y) && !f.contains(x)) closed = false;
    if (closed) out.push_back(f);
  }
  return out;
}

Congruence rho_of(Semilattice const& s, Family const& filters) {
  std::vector<std::uint64_t> keys;
  for (Element x = 0; x < s.size(); ++x) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < filters.size(); ++k)
      if (filters[k].contains(x)) key |= std::uint64_t{1} << k;
    keys.push_back(key);
  }
  return congruence_by_key(keys);
}

std::vector<Family> algebraic_subsets(Semilattice const& s, std::size_t max_filters) {
  auto const fi = all_filters(s);
  if (fi.size() > max_filters) throw Error(ErrorKind::CapExceeded, "too many filters");
  auto const whole = family_index(fi, s.carrier());
  std::vector<Family> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << fi.size()); ++bits) {
    if (!((bits >> whole) & 1U)) continue;
    Family u;
    for (std::size_t k = 0; k < fi.size(); ++k)
      if ((bits >> k) & 1U) u.push_back(fi[k]);
    bool closed = true;
    for (auto a : u)
      for (auto b : u) closed = closed && family_has(u, a & b);
    if (closed) out.push_back(u);
  }
  return out;
}

Report fajtlowicz_schmidt(Semilattice const& s) {
  Report r;
  auto const con = all_congruences(s);
  auto const sp = algebraic_subsets(s);
  auto in_sp = [&](Family const& u) { return std::find(sp.begin(), sp.end(), u) != sp.end(); };

  std::string directed;
  for (auto const& u : sp) {
    if (u.size() > 16) continue;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << u.size()); ++bits) {
      Family d;
      for (std::size_t k = 0; k < u.size(); ++k)
        if ((bits >> k) & 1U) d.push_back(u[k]);
      bool is_directed = true;
      for (auto a : d)
        for (auto b : d)
          is_directed = is_directed && std::any_of(d.begin(), d.end(), [&](Subset c) { return (a | b).subset_of(c); });
      if (is_directed && !family_has(u, generated_filter(s, union_of(d))) && directed.empty())
        directed = format_family(u, s.labels());
    }
  }
  r.add("algebraic subsets are closed under directed joins", directed.empty(), directed);

  std::string sigma_in, rho_sigma, reverse, psi_closed, psi_meets;
  auto const d = dual_space(s);
  for (auto const& theta : con) {
    auto const sig = sigma_of(s, theta);
    if (!in_sp(sig) && sigma_in.empty()) sigma_in = format_family(sig, s.labels());
    if (!(rho_of(s, sig) == theta) && rho_sigma.empty()) rho_sigma = format_family(sig, s.labels());
    for (auto const& other : con)
      if (theta.refines(other) != family_includes(sig, sigma_of(s, other)) && reverse.empty())
        reverse = "order at " + format_family(sig, s.labels());

    auto const q = quotient(s, theta);
    auto const rq = relation_of_homomorphism(q.projection);
    auto const dq = dual_space(q.algebra);
    Family psis;
    for (std::size_t p = 0; p < dq.points.size(); ++p) {
      Subset back;
      for (Element a = 0; a < s.size(); ++a)
        if (dq.points[p].contains(q.projection(a))) back = back.with(a);
      if (psi(d, rq.image[p]) != back && psi_closed.empty()) psi_closed = "psi(R_q(Q)) differs from q^{-1}[Q]";
      if (!family_has(sig, back) && psi_closed.empty()) psi_closed = format_subset(back, s.labels());
      psis.push_back(back);
    }
    for (auto f : sig) {
      if (f == s.carrier()) continue;
      Subset meet = s.carrier();
      for (auto g : psis)
        if (f.subset_of(g)) meet = meet & g;
      if (meet != f && psi_meets.empty()) psi_meets = format_subset(f, s.labels());
    }
  }
  r.add("sigma(theta) is an algebraic subset", sigma_in.empty(), sigma_in);
  r.add("rho(sigma(theta)) = theta", rho_sigma.empty(), rho_sigma);
  r.add("sigma reverses order", reverse.empty(), reverse);

  std::string rho_ok, sigma_rho;
  for (auto const& u : sp) {
    auto const theta = rho_of(s, u);
    if (!is_congruence(s, theta) && rho_ok.empty()) rho_ok = format_family(u, s.labels());
    if (sigma_of(s, theta) != u && sigma_rho.empty()) sigma_rho = format_family(u, s.labels());
  }
  r.add("rho(U) is a congruence", rho_ok.empty(), rho_ok);
  r.add("sigma(rho(U)) = U", sigma_rho.empty(), sigma_rho);
  r.add("|Con(A)| = |S_p(Fi(A))|", con.size() == sp.size(),
        std::to_string(con.size()) + " vs " + std::to_string(sp.size()));
  r.add("quotient point preimages are theta-closed filters", psi_closed.empty(), psi_closed);
  r.add("proper theta-closed filters are meets of quotient point preimages", psi_meets.empty(), psi_meets);
  return r;
}

Report congruence_laws(Semilattice const& s, ElementMap const* op) {
  Report r;
  auto const d = dual_space(s);
  auto const& pl = d.space.labels();
  auto const con = all_congruences(s, op);
  std::optional<MonotoneDual> md;
  if (op) md = build_R_m(validate_monotone(s, *op));

  std::vector<Family> from_theta;
  std::string vietoris, theta_trip, family_trip, relation_trip, remark, one_to_one, monotone, induced;
  for (auto const& theta : con) {
    auto const vf = family_of_theta(s, theta, op);
    auto const label = format_family(vf.members, pl);
    from_theta.push_back(vf.members);
    if (!check_vietoris_family(d, vf).ok()) {
      if (vietoris.empty()) vietoris = label;
      continue;
    }
    if (!(theta_of_family(d, vf) == theta) && theta_trip.empty()) theta_trip = label;
    if (family_of_theta(s, theta_of_family(d, vf), op).members != vf.members && family_trip.empty()) family_trip = label;

    auto const rq = relation_of_homomorphism(quotient(s, theta, op).projection);
    if ((!is_one_to_one(rq) || !box_is_onto(rq)) && one_to_one.empty()) one_to_one = label;
    auto const rf = relation_of_family(vf);
    if ((!is_meet_relation(rf) || !is_one_to_one(rf)) && one_to_one.empty()) one_to_one = "R_F at " + label;
    if (family_of_relation(rf).members != vf.members && relation_trip.empty()) relation_trip = label;
    for (std::size_t x = 0; x < rq.image.size(); ++x) {
      auto const k = family_index(vf.members, rq.image[x]);
      if (rf.image[k] != rq.image[x] && relation_trip.empty()) relation_trip = "R(x) at " + label;
      for (Element a = 0; a < s.size(); ++a)
        if (H_a(d, vf.members, a).contains(k) == box(rq, d.beta[a]).contains(x) && remark.empty())
          remark = label + " " + s.label(a);
    }

    if (md) {
      if (!monotone_family_check(md->space, vf).ok() && monotone.empty()) monotone = label;
      auto const mf = induced_multirelation(*md, vf);
      bool ok = check_ms_space(mf).ok() && is_monotone_meet_relation(rf, mf, md->space);
      for (Element a = 0; a < s.size(); ++a) {
        auto const hc = H_a(d, vf.members, a).complement(vf.members.size());
        ok = ok && family_has(mf.space.s_sets(), hc) &&
             m_R(mf, hc).complement(vf.members.size()) == H_a(d, vf.members, (*op)[a]);
      }
      if (!ok && induced.empty()) induced = label;
    }
  }
  r.add("families of congruences are Vietoris families", vietoris.empty(), vietoris);
  r.add("theta = theta of its family", theta_trip.empty(), theta_trip);
  r.add("F = family of theta_F", family_trip.empty(), family_trip);
  r.add("R_q and R_F are one-to-one meet-relations", one_to_one.empty(), one_to_one);
  r.add("R_F recovers F and R", relation_trip.empty(), relation_trip);
  r.add("R(x) in H_a iff x outside Box_R(beta(a))", remark.empty(), remark);
  if (md) {
    r.add("families of congruences are monotone", monotone.empty(), monotone);
    r.add("induced multirelation gives an mS-space with m_R(H_a^c)^c = H_{ma}", induced.empty(), induced);
  }

  std::sort(from_theta.begin(), from_theta.end(), family_less);
  auto const distinct = std::unique(from_theta.begin(), from_theta.end()) == from_theta.end();
  r.add("distinct congruences give distinct families", distinct);
  if (!op) r.merge(fajtlowicz_schmidt(s), "filters: ");

  try {
    auto const lattice = md ? vietoris_lattice(md->space) : vietoris_lattice(d.space);
    r.add("exhaustive search finds exactly the families of congruences", lattice.families == from_theta,
          std::to_string(lattice.families.size()) + " found, " + std::to_string(from_theta.size()) + " expected");
    r.merge(lattice.report, "lattice: ");
  } catch (Error const& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return r;
}

}  // namespace semidual
