#include "semidual/s_space.hpp"

#include <random>
#include <sstream>

#include "semidual/error.hpp"
#include "semidual/order_structures.hpp"

namespace semidual {

namespace {

Family union_closure(Family seed) {
  seed.push_back(Subset{});
  canonicalize(seed);
  for (bool grown = true; grown;) {
    grown = false;
    auto const current = seed.size();
    for (std::size_t i = 0; i < current; ++i)
      for (std::size_t j = i + 1; j < current; ++j) {
        auto const u = seed[i] | seed[j];
        if (!family_has(seed, u)) {
          seed.push_back(u);
          grown = true;
        }
      }
    canonicalize(seed);
  }
  return seed;
}

std::string pair_text(Subset a, Subset b, std::vector<std::string> const& labels) {
  return format_subset(a, labels) + " " + format_subset(b, labels);
}

}  // namespace

SSpace::SSpace(std::size_t points, Family subbase, std::vector<std::string> labels) : n_(points) {
  if (points > Subset::max_size) throw Error(ErrorKind::BadShape, "at most 64 points");
  for (auto u : subbase)
    if (!u.subset_of(universe())) throw Error(ErrorKind::BadShape, "subbase member outside the point set");
  if (!labels.empty() && labels.size() != points) throw Error(ErrorKind::BadShape, "label count differs from points");
  if (labels.empty())
    for (std::size_t i = 0; i < points; ++i) labels.push_back(std::to_string(i));
  labels_ = std::move(labels);
  k_ = union_closure(std::move(subbase));
  for (auto u : k_) s_.push_back(u.complement(n_));
  canonicalize(s_);
  ck_ = intersection_closure(s_, universe());
  basis_ = intersection_closure(k_, universe());
  cl_point_.resize(n_);
  for (std::size_t y = 0; y < n_; ++y) cl_point_[y] = closure(Subset::singleton(y));
}

Family SSpace::opens() const {
  Family out{Subset{}};
  for (auto b : basis_) {
    auto const current = out.size();
    for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] | b);
    canonicalize(out);
  }
  return out;
}

bool SSpace::is_open(Subset u) const {
  Subset covered;
  for (auto b : basis_)
    if (b.subset_of(u)) covered = covered | b;
  return covered == u;
}

Subset SSpace::closure(Subset s) const {
  Subset outside;
  for (auto b : basis_)
    if (!b.intersects(s)) outside = outside | b;
  return universe() - outside;
}

Subset SSpace::saturation(Subset s) const {
  Subset out;
  s.for_each([&](std::size_t x) {
    Subset neighbourhood = universe();
    for (auto b : basis_)
      if (b.contains(x)) neighbourhood = neighbourhood & b;
    out = out | neighbourhood;
  });
  return out;
}

bool is_dually_directed(Family const& family) {
  if (family.empty()) return false;
  for (auto u : family)
    for (auto v : family) {
      bool found = false;
      for (auto w : family) found = found || w.subset_of(u & v);
      if (!found) return false;
    }
  return true;
}

bool is_directed_family(Family const& family) {
  if (family.empty()) return false;
  for (auto u : family)
    for (auto v : family) {
      bool found = false;
      for (auto w : family) found = found || (u | v).subset_of(w);
      if (!found) return false;
    }
  return true;
}

YFamilyWitness is_Y_family(SSpace const& x, Subset y, Family const& j) {
  if (!family_has(x.subbasic_closed(), y)) throw Error(ErrorKind::YNotClosed, "Y is not a subbasic closed set");
  for (auto a : j)
    if (!family_has(x.s_sets(), a)) throw Error(ErrorKind::NotInSX, "family member outside S(X)");
  YFamilyWitness out;
  for (std::size_t p = 0; p < j.size(); ++p)
    for (std::size_t q = p; q < j.size(); ++q) {
      auto const a = j[p];
      auto const b = j[q];
      std::optional<YFamilyEntry> found;
      for (auto h : x.s_sets()) {
        if (!y.subset_of(h)) continue;
        for (auto c : j)
          if ((a & h).subset_of(c) && (b & h).subset_of(c)) {
            found = YFamilyEntry{a, b, h, c};
            break;
          }
        if (found) break;
      }
      if (!found) {
        out.holds = false;
        out.counter = std::make_pair(a, b);
        out.entries.clear();
        return out;
      }
      out.entries.push_back(*found);
    }
  return out;
}

Report check_s_space(SSpace const& x, SSpaceCheckOptions const& options) {
  Report r;
  auto const& labels = x.labels();
  auto const& k = x.subbase();
  auto const& s = x.s_sets();

  std::string t0;
  for (std::size_t p = 0; p < x.size() && t0.empty(); ++p)
    for (std::size_t q = p + 1; q < x.size() && t0.empty(); ++q) {
      bool separated = false;
      for (auto u : k) separated = separated || (u.contains(p) != u.contains(q));
      if (!separated) t0 = labels[p] + " " + labels[q];
    }
  r.add("S1 T0", t0.empty(), t0);
  auto const uncovered = x.universe() - union_of(k);
  r.add("S1 subbase covers X", uncovered.empty(), format_subset(uncovered, labels));

  std::string unions;
  for (auto u : k)
    for (auto v : k)
      if (unions.empty() && !family_has(k, u | v)) unions = pair_text(u, v, labels);
  r.add("S2 closed under finite unions", unions.empty(), unions);
  r.add("S2 empty set in K", family_has(k, Subset{}));
  std::string compact;
  for (auto u : k) {
    if (!x.is_open(u)) compact = format_subset(u, labels) + " not open";
    if (compact.empty() && !x.is_compact(u)) compact = format_subset(u, labels) + " not compact";
  }
  r.add("S2 compact open subbase", compact.empty(), compact);

  std::string s3;
  for (auto u : k)
    for (auto v : k)
      (u & v).for_each([&](std::size_t p) {
        if (!s3.empty()) return;
        bool found = false;
        for (auto w : k) {
          if (w.contains(p)) continue;
          for (auto d : k)
            if (d.contains(p) && d.subset_of((u & v) | w)) found = true;
          if (found) break;
        }
        if (!found) s3 = "x=" + labels[p] + " U,V=" + pair_text(u, v, labels);
      });
  r.add("S3", s3.empty(), s3);

  // S4.  For a fixed Y, mediators[a][b] is the bitmask of C indices that
  // witness the pair (A, B) for some H in S(X) above Y.
  bool const exhaustive = s.size() <= options.s4_cap;
  std::mt19937_64 rng(options.seed);
  std::string s4;
  for (auto y : x.subbasic_closed()) {
    if (!s4.empty()) break;
    std::vector<std::size_t> admissible;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!y.subset_of(s[i])) admissible.push_back(i);
    auto const m = admissible.size();
    std::vector<std::vector<std::uint64_t>> mediators(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        for (auto h : s) {
          if (!y.subset_of(h)) continue;
          auto const a = s[admissible[p]] & h;
          auto const b = s[admissible[q]] & h;
          for (std::size_t c = 0; c < m; ++c)
            if (a.subset_of(s[admissible[c]]) && b.subset_of(s[admissible[c]]))
              mediators[p][q] |= std::uint64_t{1} << c;
        }
    auto test = [&](std::uint64_t chosen) {
      Subset js{chosen};
      bool family = true;
      js.for_each([&](std::size_t p) {
        js.for_each([&](std::size_t q) { family = family && (mediators[p][q] & chosen) != 0; });
      });
      if (!family) return;
      Subset meet = y;
      js.for_each([&](std::size_t p) { meet = meet - s[admissible[p]]; });
      if (meet.empty()) {
        std::ostringstream w;
        w << "Y=" << format_subset(y, labels) << " J={";
        bool first = true;
        js.for_each([&](std::size_t p) {
          w << (first ? "" : ",") << format_subset(s[admissible[p]], labels);
          first = false;
        });
        w << '}';
        s4 = w.str();
      }
    };
    if (exhaustive) {
      for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << m) && s4.empty(); ++chosen) test(chosen);
    } else {
      auto const samples = options.s4_samples / std::max<std::size_t>(1, x.subbasic_closed().size()) + 1;
      for (std::size_t i = 0; i < samples && s4.empty() && m > 0; ++i) {
        auto chosen = rng() & Subset::full(m).bits();
        if (chosen != 0) test(chosen);
      }
    }
  }
  r.add(exhaustive ? "S4" : "S4 (partial)", s4.empty(), s4);
  return r;
}

Family subbasic_saturated(SSpace const& x) {
  auto const& k = x.subbase();
  if (k.size() > 16) throw Error(ErrorKind::CapExceeded, "subbasic saturated sets are enumerated for |K| <= 16");
  Family out;
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << k.size()); ++chosen) {
    Family l;
    Subset{chosen}.for_each([&](std::size_t i) { l.push_back(k[i]); });
    if (is_dually_directed(l)) out.push_back(intersection_of(l, x.universe()));
  }
  canonicalize(out);
  return out;
}

DualSpace dual_space(Semilattice const& s) {
  DualSpace d{s, irreducible_filters(s), {}, {}};
  auto const k = d.points.size();
  d.beta.assign(s.size(), Subset{});
  for (std::size_t i = 0; i < k; ++i) d.points[i].for_each([&](Element a) { d.beta[a] = d.beta[a].with(i); });
  Family subbase;
  for (auto b : d.beta) subbase.push_back(b.complement(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("P" + std::to_string(i + 1));
  d.space = SSpace(k, std::move(subbase), std::move(labels));
  return d;
}

Subset phi(DualSpace const& d, Subset filter) {
  Subset out;
  for (std::size_t i = 0; i < d.points.size(); ++i)
    if (filter.subset_of(d.points[i])) out = out.with(i);
  return out;
}

Subset psi(DualSpace const& d, Subset y) {
  Subset out;
  for (Element a = 0; a < d.algebra.size(); ++a)
    if (y.subset_of(d.beta[a])) out = out.with(a);
  return out;
}

DualAlgebra dual_semilattice(SSpace const& x) {
  auto const& sets = x.s_sets();
  MeetTable table(sets.size(), std::vector<Element>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      auto const k = family_index(sets, sets[i] & sets[j]);
      if (k == sets.size()) throw Error(ErrorKind::BadShape, "S(X) is not closed under intersection");
      table[i][j] = k;
    }
  std::vector<std::string> labels;
  for (auto u : sets) labels.push_back(format_subset(u, x.labels()));
  auto const top = family_index(sets, x.universe());
  return DualAlgebra{validate_semilattice(table, top, std::move(labels)), sets};
}

bool is_homeomorphism(SSpace const& a, SSpace const& b, std::vector<std::size_t> const& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  Subset image;
  for (auto v : map) {
    if (v >= b.size()) return false;
    image = image.with(v);
  }
  if (image != b.universe()) return false;
  Family transported;
  for (auto u : a.subbase()) {
    Subset t;
    u.for_each([&](std::size_t p) { t = t.with(map[p]); });
    transported.push_back(t);
  }
  return canonical(transported) == b.subbase();
}

HomeomorphismData H_X(SSpace const& x, SSpaceCheckOptions const& options) {
  auto const report = check_s_space(x, options);
  if (auto const* failure = report.first_failure())
    throw Error(ErrorKind::NotAnSSpace, failure->name + " fails: " + failure->witness);
  HomeomorphismData out{dual_semilattice(x), {}, {}};
  out.codomain = dual_space(out.algebra.algebra);
  for (std::size_t p = 0; p < x.size(); ++p) {
    Subset filter;
    for (std::size_t k = 0; k < out.algebra.sets.size(); ++k)
      if (out.algebra.sets[k].contains(p)) filter = filter.with(k);
    auto const idx = family_index(out.codomain.points, filter);
    if (idx == out.codomain.points.size())
      throw Error(ErrorKind::NotAnSSpace, "point " + x.labels()[p] + " does not give an irreducible filter", {p});
    out.map.push_back(idx);
  }
  return out;
}

Report s_space_laws(Semilattice const& s, SSpaceCheckOptions const& options) {
  Report r;
  auto const d = dual_space(s);
  auto const& x = d.space;
  auto const n = s.size();
  auto const& labels = s.labels();

  r.merge(check_s_space(x, options), "dual space ");

  std::string beta;
  for (Element a = 0; a < n && beta.empty(); ++a)
    for (Element b = 0; b < n && beta.empty(); ++b) {
      if (a != b && d.beta[a] == d.beta[b]) beta = "not injective at " + labels[a] + "," + labels[b];
      if ((d.beta[a] & d.beta[b]) != d.beta[s.meet(a, b)]) beta = "meet fails at " + labels[a] + "," + labels[b];
    }
  if (beta.empty() && d.beta[s.top()] != x.universe()) beta = "top not sent to X";
  if (beta.empty() && canonical(d.beta) != x.s_sets()) beta = "image differs from S(X)";
  r.add("beta is an isomorphism onto S(X)", beta.empty(), beta);

  auto const filters = all_filters(s);
  std::string phipsi;
  Family images;
  for (auto f : filters) {
    auto const y = phi(d, f);
    images.push_back(y);
    if (psi(d, y) != f && phipsi.empty()) phipsi = "psi(phi(F)) != F at " + format_subset(f, labels);
    for (auto g : filters)
      if (f.subset_of(g) != phi(d, g).subset_of(y) && phipsi.empty())
        phipsi = "order not reversed at " + format_subset(f, labels) + " " + format_subset(g, labels);
  }
  if (phipsi.empty() && canonical(images) != x.subbasic_closed()) phipsi = "phi is not onto C_K";
  for (auto y : x.subbasic_closed())
    if (phipsi.empty() && phi(d, psi(d, y)) != y) phipsi = "phi(psi(Y)) != Y at " + format_subset(y, x.labels());
  r.add("phi and psi are inverse dual isomorphisms", phipsi.empty(), phipsi);

  std::string homeo;
  try {
    auto const h = H_X(x, options);
    if (!is_homeomorphism(x, h.codomain.space, h.map)) homeo = "not a homeomorphism";
  } catch (Error const& e) {
    homeo = e.what();
  }
  r.add("H_X is a homeomorphism", homeo.empty(), homeo);

  std::string spec;
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q)
      if (x.specializes(p, q) != d.points[q].subset_of(d.points[p]) && spec.empty())
        spec = x.labels()[p] + " " + x.labels()[q];
  r.add("specialization is reverse inclusion", spec.empty(), spec);

  // Equality with the least S(X)-intersection holds on points; on arbitrary
  // sets only the inclusion does.
  std::string cl;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << x.size()) && cl.empty(); ++bits) {
    Subset t{bits};
    Subset via_s = x.universe();
    for (auto u : x.s_sets())
      if (t.subset_of(u)) via_s = via_s & u;
    bool const ok = t.size() == 1 ? via_s == x.closure(t) : x.closure(t).subset_of(via_s);
    if (!ok) cl = format_subset(t, x.labels());
  }
  r.add("closure lies below the least S(X)-intersection, with equality on points", cl.empty(), cl);

  std::string sat;
  auto const z = subbasic_saturated(x);
  for (auto u : z)
    if (sat.empty() && (!x.is_saturated(u) || !x.is_compact(u))) sat = format_subset(u, x.labels());
  r.add("subbasic saturated sets are compact and saturated", sat.empty(), sat);
  r.add("subbasic saturated sets are the subbase", z == x.subbase());

  // Dually directed subfamilies of K correspond to the
  // subfamilies of S(X) that are Y-families for every Y.
  std::string yfam;
  auto const& k = x.subbase();
  if (k.size() <= 12) {
    for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << k.size()) && yfam.empty(); ++chosen) {
      Family l, a;
      Subset{chosen}.for_each([&](std::size_t i) {
        l.push_back(k[i]);
        a.push_back(k[i].complement(x.size()));
      });
      canonicalize(a);
      bool every = true;
      for (auto y : x.subbasic_closed()) every = every && is_Y_family(x, y, a).holds;
      if (every != is_dually_directed(l)) yfam = format_subset(Subset{chosen});
    }
  }
  r.add("dually directed families are the universal Y-families", yfam.empty(), yfam);
  return r;
}

std::string specialization_dot(SSpace const& x) {
  std::ostringstream out;
  out << "digraph specialization {\n  rankdir=BT;\n";
  for (auto const& l : x.labels()) out << "  \"" << l << "\";\n";
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q) {
      if (p == q || !x.specializes(p, q) || x.specializes(q, p)) continue;
      bool cover = true;
      for (std::size_t r = 0; r < x.size() && cover; ++r)
        if (r != p && r != q && x.specializes(p, r) && x.specializes(r, q) && !x.specializes(r, p) &&
            !x.specializes(q, r))
          cover = false;
      if (cover) out << "  \"" << x.labels()[p] << "\" -> \"" << x.labels()[q] << "\";\n";
    }
  out << "}\n";
  return out.str();
}

std::string beta_dot(DualSpace const& d) {
  std::ostringstream out;
  out << "graph beta {\n";
  for (auto const& l : d.algebra.labels()) out << "  \"" << l << "\" [shape=box];\n";
  for (auto const& l : d.space.labels()) out << "  \"" << l << "\" [shape=ellipse];\n";
  for (Element a = 0; a < d.algebra.size(); ++a)
    d.beta[a].for_each([&](std::size_t p) {
      out << "  \"" << d.algebra.label(a) << "\" -- \"" << d.space.labels()[p] << "\";\n";
    });
  out << "}\n";
  return out.str();
}

}  // namespace semidual
