#include "semidual/semilattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "semidual/error.hpp"

namespace semidual {

namespace {

std::string triple(std::vector<std::size_t> const& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ')';
  return out.str();
}

}  // namespace

Element Semilattice::meet_of(Subset s) const {
  Element acc = top_;
  s.for_each([&](Element a) { acc = meet(acc, a); });
  return acc;
}

std::optional<Element> Semilattice::join(Element a, Element b) const {
  auto const bounds = up_[a] & up_[b];
  std::optional<Element> best;
  bounds.for_each([&](Element c) {
    if (bounds.subset_of(up_[c])) best = c;
  });
  return best;
}

std::optional<Element> Semilattice::find(std::string_view label) const {
  for (Element a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

MeetTable Semilattice::table() const {
  MeetTable out(n_, std::vector<Element>(n_));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) out[a][b] = meet(a, b);
  return out;
}

Semilattice validate_semilattice(MeetTable const& meet, Element top, std::vector<std::string> labels) {
  auto const n = meet.size();
  if (n == 0 || n > Subset::max_size) throw Error(ErrorKind::BadShape, "carrier size must be in 1..64");
  for (auto const& row : meet) {
    if (row.size() != n) throw Error(ErrorKind::BadShape, "meet table is not square");
    for (auto v : row)
      if (v >= n) throw Error(ErrorKind::BadShape, "meet table entry out of range");
  }
  if (top >= n) throw Error(ErrorKind::BadShape, "top out of range");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::BadShape, "label count differs from table size");

  for (Element a = 0; a < n; ++a)
    if (meet[a][a] != a) throw Error(ErrorKind::NotIdempotent, "a^a != a at " + triple({a}), {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (meet[a][b] != meet[b][a]) throw Error(ErrorKind::NotCommutative, "a^b != b^a at " + triple({a, b}), {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]])
          throw Error(ErrorKind::NotAssociative, "(a^b)^c != a^(b^c) at " + triple({a, b, c}), {a, b, c});
  for (Element a = 0; a < n; ++a)
    if (meet[a][top] != a) throw Error(ErrorKind::BadUnit, "a^1 != a at " + triple({a}), {a});

  Semilattice s;
  s.n_ = n;
  s.top_ = top;
  s.table_.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) s.table_[a * n + b] = meet[a][b];
  s.up_.assign(n, Subset{});
  s.down_.assign(n, Subset{});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (meet[a][b] == a) {
        s.up_[a] = s.up_[a].with(b);
        s.down_[b] = s.down_[b].with(a);
      }
  if (labels.empty()) {
    for (Element a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  s.labels_ = std::move(labels);
  return s;
}

Semilattice semilattice_from_covers(std::vector<std::string> labels,
                                    std::vector<std::pair<Element, Element>> const& covers, Element top) {
  auto const n = labels.size();
  if (n == 0 || n > Subset::max_size) throw Error(ErrorKind::BadShape, "carrier size must be in 1..64");
  std::vector<Subset> up(n);
  for (Element a = 0; a < n; ++a) up[a] = Subset::singleton(a);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorKind::BadShape, "cover endpoint out of range");
    up[lo] = up[lo].with(hi);
  }
  // transitive closure
  for (std::size_t round = 0; round < n; ++round)
    for (Element a = 0; a < n; ++a) {
      Subset acc = up[a];
      up[a].for_each([&](Element b) { acc = acc | up[b]; });
      up[a] = acc;
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (up[a].contains(b) && up[b].contains(a))
        throw Error(ErrorKind::BadShape, "covers contain a cycle through " + labels[a] + " and " + labels[b], {a, b});
  std::vector<Subset> down(n);
  for (Element a = 0; a < n; ++a) up[a].for_each([&](Element b) { down[b] = down[b].with(a); });

  MeetTable table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto const lower = down[a] & down[b];
      std::optional<Element> greatest;
      lower.for_each([&](Element c) {
        if (lower.subset_of(down[c])) greatest = c;
      });
      if (!greatest)
        throw Error(ErrorKind::BadShape, "no meet for " + labels[a] + " and " + labels[b], {a, b});
      table[a][b] = *greatest;
    }
  return validate_semilattice(table, top, std::move(labels));
}

bool is_order_preserving(Semilattice const& source, Semilattice const& target, ElementMap const& map) {
  if (map.size() != source.size()) return false;
  for (Element a = 0; a < source.size(); ++a) {
    if (map[a] >= target.size()) return false;
    bool ok = true;
    source.up(a).for_each([&](Element b) { ok = ok && target.leq(map[a], map[b]); });
    if (!ok) return false;
  }
  return true;
}

MonotoneSemilattice validate_monotone(Semilattice base, ElementMap op) {
  if (op.size() != base.size()) throw Error(ErrorKind::BadShape, "operator is not total on the carrier");
  for (auto v : op)
    if (v >= base.size()) throw Error(ErrorKind::BadShape, "operator value out of range");
  for (Element a = 0; a < base.size(); ++a)
    for (Element b = 0; b < base.size(); ++b)
      if (base.leq(a, b) && !base.leq(op[a], op[b]))
        throw Error(ErrorKind::NotMonotone, "a <= b but m(a) !<= m(b) at " + triple({a, b}), {a, b});
  return MonotoneSemilattice{std::move(base), std::move(op)};
}

Homomorphism validate_homomorphism(Semilattice source, Semilattice target, ElementMap map) {
  if (map.size() != source.size()) throw Error(ErrorKind::BadShape, "map is not total on the source");
  for (auto v : map)
    if (v >= target.size()) throw Error(ErrorKind::BadShape, "map value out of range");
  if (map[source.top()] != target.top())
    throw Error(ErrorKind::NotAHomomorphism, "h(1) != 1", {source.top()});
  for (Element a = 0; a < source.size(); ++a)
    for (Element b = 0; b < source.size(); ++b)
      if (map[source.meet(a, b)] != target.meet(map[a], map[b]))
        throw Error(ErrorKind::NotAHomomorphism, "h(a^b) != h(a)^h(b) at " + triple({a, b}), {a, b});
  return Homomorphism{std::move(source), std::move(target), std::move(map)};
}

Homomorphism identity_homomorphism(Semilattice const& s) {
  ElementMap id(s.size());
  std::iota(id.begin(), id.end(), Element{0});
  return Homomorphism{s, s, std::move(id)};
}

Homomorphism compose(Homomorphism const& g, Homomorphism const& h) {
  if (!(h.target == g.source)) throw Error(ErrorKind::NotComposable, "target of h differs from source of g");
  ElementMap map(h.source.size());
  for (Element a = 0; a < map.size(); ++a) map[a] = g.map[h.map[a]];
  return Homomorphism{h.source, g.target, std::move(map)};
}

bool is_onto(Homomorphism const& h) {
  Subset image;
  for (auto v : h.map) image = image.with(v);
  return image == h.target.carrier();
}

bool is_monotone_homomorphism(Homomorphism const& h, ElementMap const& m, ElementMap const& n) {
  for (Element a = 0; a < h.source.size(); ++a)
    if (h.map[m[a]] != n[h.map[a]]) return false;
  return true;
}

// --- congruences -----------------------------------------------------------

Congruence::Congruence(std::vector<std::size_t> class_of) {
  std::map<std::size_t, std::size_t> renumber;
  for (auto& c : class_of) {
    auto [it, inserted] = renumber.emplace(c, renumber.size());
    c = it->second;
  }
  class_of_ = std::move(class_of);
  num_classes_ = renumber.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return Congruence(std::move(c));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

std::vector<Subset> Congruence::classes() const {
  std::vector<Subset> out(num_classes_);
  for (Element a = 0; a < class_of_.size(); ++a) out[class_of_[a]] = out[class_of_[a]].with(a);
  return out;
}

bool Congruence::refines(Congruence const& other) const {
  for (Element a = 0; a < size(); ++a)
    for (Element b = a + 1; b < size(); ++b)
      if (related(a, b) && !other.related(a, b)) return false;
  return true;
}

namespace {

std::optional<std::vector<std::size_t>> congruence_violation(Semilattice const& s, Congruence const& theta,
                                                             ElementMap const* op) {
  auto const n = s.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (!theta.related(a, b)) continue;
      for (Element c = 0; c < n; ++c)
        if (!theta.related(s.meet(a, c), s.meet(b, c))) return std::vector<std::size_t>{a, b, c};
      if (op && !theta.related((*op)[a], (*op)[b])) return std::vector<std::size_t>{a, b};
    }
  return std::nullopt;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence close_partition(Semilattice const& s, UnionFind uf, ElementMap const* op) {
  auto const n = s.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (Element c = 0; c < n; ++c) changed |= uf.unite(s.meet(a, c), s.meet(b, c));
        if (op) changed |= uf.unite((*op)[a], (*op)[b]);
      }
  }
  std::vector<std::size_t> cls(n);
  for (Element a = 0; a < n; ++a) cls[a] = uf.find(a);
  return Congruence(std::move(cls));
}

}  // namespace

bool is_congruence(Semilattice const& s, Congruence const& theta, ElementMap const* op) {
  return theta.size() == s.size() && !congruence_violation(s, theta, op);
}

void validate_congruence(Semilattice const& s, Congruence const& theta, ElementMap const* op) {
  if (theta.size() != s.size()) throw Error(ErrorKind::NotACongruence, "partition size differs from carrier");
  if (auto w = congruence_violation(s, theta, op)) {
    throw Error(ErrorKind::NotACongruence,
                w->size() == 3 ? "related pair not compatible with meet by " + triple(*w)
                               : "related pair not compatible with the operator " + triple(*w),
                *w);
  }
}

Congruence congruence_generated_by(Semilattice const& s, std::vector<std::pair<Element, Element>> const& pairs,
                                   ElementMap const* op) {
  UnionFind uf(s.size());
  for (auto [a, b] : pairs) uf.unite(a, b);
  return close_partition(s, std::move(uf), op);
}

Congruence congruence_meet(Congruence const& a, Congruence const& b) {
  std::vector<std::size_t> cls(a.size());
  for (Element x = 0; x < a.size(); ++x) cls[x] = a.class_of(x) * (b.num_classes() + 1) + b.class_of(x);
  return Congruence(std::move(cls));
}

Congruence congruence_join(Semilattice const& s, Congruence const& a, Congruence const& b, ElementMap const* op) {
  UnionFind uf(s.size());
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = x + 1; y < s.size(); ++y)
      if (a.related(x, y) || b.related(x, y)) uf.unite(x, y);
  return close_partition(s, std::move(uf), op);
}

Quotient quotient(Semilattice const& s, Congruence const& theta, ElementMap const* op) {
  validate_congruence(s, theta, op);
  auto const k = theta.num_classes();
  std::vector<Element> rep(k, s.size());
  for (Element a = s.size(); a-- > 0;) rep[theta.class_of(a)] = a;
  MeetTable table(k, std::vector<Element>(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = s.label(rep[i]);
    for (std::size_t j = 0; j < k; ++j) table[i][j] = theta.class_of(s.meet(rep[i], rep[j]));
  }
  auto algebra = validate_semilattice(table, theta.class_of(s.top()), std::move(labels));
  Quotient q{algebra, Homomorphism{s, algebra, theta.labels()}, std::nullopt};
  if (op) {
    ElementMap induced(k);
    for (std::size_t i = 0; i < k; ++i) induced[i] = theta.class_of((*op)[rep[i]]);
    q.op = std::move(induced);
  }
  return q;
}

void for_each_partition(std::size_t n, std::function<void(std::vector<std::size_t> const&)> const& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      visit(rgs);
      return;
    }
    auto const bound = max_prefix[i - 1] + 1;
    for (std::size_t v = 0; v <= bound; ++v) {
      rgs[i] = v;
      max_prefix[i] = std::max(max_prefix[i - 1], v);
      rec(i + 1);
    }
  };
  rgs[0] = 0;
  max_prefix[0] = 0;
  rec(1);
}

// --- enumeration -----------------------------------------------------------

namespace {

/// Strict order as up-sets (excluding self) -> minimal code over linear
/// extensions.  Bit (i*n + j) is set when new index i lies strictly below j.
std::uint64_t min_linear_extension_code(std::vector<Subset> const& strict_up) {
  auto const n = strict_up.size();
  std::vector<Subset> strict_down(n);
  for (std::size_t a = 0; a < n; ++a) strict_up[a].for_each([&](std::size_t b) { strict_down[b] = strict_down[b].with(a); });

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> order;  // order[new] = old
  std::vector<std::size_t> position(n);
  Subset placed;
  std::function<void()> rec = [&]() {
    if (order.size() == n) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i)
        strict_up[order[i]].for_each([&](std::size_t b) { code |= std::uint64_t{1} << (i * n + position[b]); });
      best = std::min(best, code);
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (placed.contains(a) || !strict_down[a].subset_of(placed)) continue;
      position[a] = order.size();
      order.push_back(a);
      placed = placed.with(a);
      rec();
      placed = placed.without(a);
      order.pop_back();
    }
  };
  rec();
  return best;
}

Semilattice decode(std::uint64_t code, std::size_t n) {
  std::vector<Subset> down(n);
  for (std::size_t a = 0; a < n; ++a) down[a] = Subset::singleton(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1U) down[j] = down[j].with(i);
  MeetTable table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto const lower = down[a] & down[b];
      Element g = 0;
      lower.for_each([&](std::size_t c) {
        if (lower.subset_of(down[c])) g = c;
      });
      table[a][b] = g;
    }
  return validate_semilattice(table, n - 1);
}

bool has_all_meets(std::vector<Subset> const& strict_up) {
  auto const n = strict_up.size();
  std::vector<Subset> down(n);
  for (std::size_t a = 0; a < n; ++a) {
    down[a] = down[a].with(a);
    strict_up[a].for_each([&](std::size_t b) { down[b] = down[b].with(a); });
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto const lower = down[a] & down[b];
      bool found = false;
      lower.for_each([&](std::size_t c) { found = found || lower.subset_of(down[c]); });
      if (!found) return false;
    }
  return true;
}

}  // namespace

std::uint64_t canonical_order_code(Semilattice const& s) {
  if (s.size() > 8) throw Error(ErrorKind::CapExceeded, "canonical codes are limited to 8 elements");
  std::vector<Subset> strict_up(s.size());
  for (Element a = 0; a < s.size(); ++a) strict_up[a] = s.up(a).without(a);
  return min_linear_extension_code(strict_up);
}

std::vector<Semilattice> semilattices_of_size(std::size_t n) {
  if (n == 0) return {};
  if (n > 8) throw Error(ErrorKind::CapExceeded, "enumeration is limited to 8 elements");
  auto const top = n - 1;
  std::vector<Subset> strict_up(n);
  std::vector<std::uint64_t> codes;
  // Element i picks its strict up-set among {i+1..n-1}: an up-closed set of
  // the order built so far that contains the top.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == static_cast<std::size_t>(-1)) {
      if (has_all_meets(strict_up)) codes.push_back(min_linear_extension_code(strict_up));
      return;
    }
    auto const above = Subset::full(n) - Subset::full(i + 1);
    auto const choices = above.without(top);
    auto const free = choices.members();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size()); ++pick) {
      Subset u = Subset::singleton(top);
      for (std::size_t k = 0; k < free.size(); ++k)
        if ((pick >> k) & 1U) u = u.with(free[k]);
      bool closed = true;
      u.for_each([&](std::size_t j) { closed = closed && strict_up[j].subset_of(u); });
      if (!closed) continue;
      strict_up[i] = u;
      rec(i - 1);
    }
    strict_up[i] = Subset{};
  };
  if (n == 1) {
    codes.push_back(0);
  } else {
    rec(n - 2);
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Semilattice> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(decode(c, n));
  return out;
}

std::vector<Semilattice> enumerate_semilattices(std::size_t n_max) {
  std::vector<Semilattice> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto part = semilattices_of_size(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<ElementMap> all_order_preserving_maps(Semilattice const& source, Semilattice const& target) {
  std::vector<ElementMap> out;
  ElementMap map(source.size());
  std::function<void(Element)> rec = [&](Element a) {
    if (a == source.size()) {
      out.push_back(map);
      return;
    }
    for (Element v = 0; v < target.size(); ++v) {
      bool ok = true;
      for (Element b = 0; b < a && ok; ++b) {
        if (source.leq(a, b) && !target.leq(v, map[b])) ok = false;
        if (source.leq(b, a) && !target.leq(map[b], v)) ok = false;
      }
      if (!ok) continue;
      map[a] = v;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<ElementMap> all_monotone_operators(Semilattice const& s) { return all_order_preserving_maps(s, s); }

std::vector<Homomorphism> all_homomorphisms(Semilattice const& source, Semilattice const& target) {
  std::vector<Homomorphism> out;
  for (auto& map : all_order_preserving_maps(source, target)) {
    if (map[source.top()] != target.top()) continue;
    bool ok = true;
    for (Element a = 0; a < source.size() && ok; ++a)
      for (Element b = a + 1; b < source.size() && ok; ++b)
        ok = map[source.meet(a, b)] == target.meet(map[a], map[b]);
    if (ok) out.push_back(Homomorphism{source, target, std::move(map)});
  }
  return out;
}

}  // namespace semidual
