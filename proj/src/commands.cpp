#include "semidual/commands.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "semidual/canonical_extension.hpp"
#include "semidual/congruence_vietoris.hpp"
#include "semidual/error.hpp"
#include "semidual/map_extensions.hpp"
#include "semidual/monotone_duality.hpp"
#include "semidual/order_structures.hpp"
#include "semidual/s_space.hpp"

namespace semidual {
namespace {

using Labels = std::vector<std::string>;

// ---------------------------------------------------------------- parsing

Labels parse_labels(Json const& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"elements\" must be a nonempty array of strings");
  Labels out;
  for (auto const& e : j) {
    if (!e.is_string() || e.get<std::string>().empty())
      throw ParseError("\"elements\" entries must be nonempty strings");
    auto label = e.get<std::string>();
    if (std::find(out.begin(), out.end(), label) != out.end()) throw ParseError("duplicate label \"" + label + "\"");
    out.push_back(std::move(label));
  }
  if (out.size() > Subset::max_size) throw ParseError("at most 64 elements are supported");
  return out;
}

Element lookup(Labels const& labels, Json const& j, std::string const& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a label");
  auto const it = std::find(labels.begin(), labels.end(), j.get<std::string>());
  if (it == labels.end()) throw ParseError(where + ": unknown label \"" + j.get<std::string>() + "\"");
  return static_cast<Element>(it - labels.begin());
}

void require_keys(Json const& j, std::vector<std::string> const& allowed, std::string const& where) {
  for (auto const& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError(where + ": unexpected field \"" + key + "\"");
}

Semilattice algebra_from_json(Json const& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("elements")) throw ParseError("missing \"elements\"");
  if (!j.contains("top")) throw ParseError("missing \"top\"");
  auto labels = parse_labels(j["elements"]);
  auto const n = labels.size();
  auto const top = lookup(labels, j["top"], "top");
  bool const has_order = j.contains("order");
  bool const has_meet = j.contains("meet");
  if (has_order == has_meet) throw ParseError("exactly one of \"order\" and \"meet\" must be present");
  if (has_order) {
    auto const& order = j["order"];
    if (!order.is_array()) throw ParseError("\"order\" must be an array of [lower, upper] pairs");
    std::vector<std::pair<Element, Element>> covers;
    for (auto const& pair : order) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("\"order\" entries must be [lower, upper] pairs");
      covers.emplace_back(lookup(labels, pair[0], "order"), lookup(labels, pair[1], "order"));
    }
    return semilattice_from_covers(std::move(labels), covers, top);
  }
  auto const& meet = j["meet"];
  if (!meet.is_array() || meet.size() != n) throw ParseError("\"meet\" must have one row per element");
  MeetTable table(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!meet[a].is_array() || meet[a].size() != n) throw ParseError("\"meet\" rows must have one entry per element");
    for (std::size_t b = 0; b < n; ++b) table[a].push_back(lookup(labels, meet[a][b], "meet"));
  }
  return validate_semilattice(table, top, std::move(labels));
}

ElementMap map_from_json(Json const& j, Semilattice const& source, Semilattice const& target, std::string const& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object from labels to labels");
  ElementMap map(source.size());
  std::vector<bool> seen(source.size(), false);
  for (auto const& [key, value] : j.items()) {
    auto const a = source.find(key);
    if (!a) throw ParseError(where + ": unknown label \"" + key + "\"");
    map[*a] = lookup(target.labels(), value, where);
    seen[*a] = true;
  }
  for (Element a = 0; a < source.size(); ++a)
    if (!seen[a]) throw ParseError(where + ": no image for \"" + source.label(a) + "\"");
  return map;
}

Json map_to_json(ElementMap const& map, Semilattice const& source, Semilattice const& target) {
  Json out = Json::object();
  for (Element a = 0; a < source.size(); ++a) out[source.label(a)] = target.label(map[a]);
  return out;
}

Json algebra_to_json(Semilattice const& s) {
  Json meet = Json::array();
  for (Element a = 0; a < s.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < s.size(); ++b) row.push_back(s.label(s.meet(a, b)));
    meet.push_back(std::move(row));
  }
  return Json{{"elements", s.labels()}, {"meet", std::move(meet)}, {"top", s.label(s.top())}};
}

// ------------------------------------------------------------- rendering

Json set_json(Subset s, Labels const& labels) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}

Json family_json(Family const& f, Labels const& labels) {
  Json out = Json::array();
  for (auto s : f) out.push_back(set_json(s, labels));
  return out;
}

// Cover pairs [i, j] of a finite order given by `leq` on indices 0..n-1.
Json covers_json(std::size_t n, std::function<bool(std::size_t, std::size_t)> const& leq) {
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j) || leq(j, i)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j) && !leq(k, i) && !leq(j, k)) cover = false;
      if (cover) out.push_back(Json::array({i, j}));
    }
  return out;
}

Json element_covers_json(Semilattice const& s) {
  Json out = Json::array();
  for (auto const& pair : covers_json(s.size(), [&](std::size_t a, std::size_t b) { return s.leq(a, b); }))
    out.push_back(Json::array({s.label(pair[0].get<std::size_t>()), s.label(pair[1].get<std::size_t>())}));
  return out;
}

Json checks_json(Report const& r) {
  Json out = Json::array();
  for (auto const& c : r.checks()) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["witness"] = c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

CommandResult finish(std::string const& command, Json payload, Report const& r) {
  CommandResult out;
  bool const ok = r.ok();
  out.exit_code = ok ? kOk : kCounterexample;
  out.report = Json{{"command", command},
                    {"status", ok ? "ok" : "counterexample"},
                    {"payload", std::move(payload)},
                    {"checks", checks_json(r)}};
  return out;
}

std::string witness_text(std::vector<std::size_t> const& witness, Labels const& labels) {
  std::string out;
  for (auto i : witness) {
    if (!out.empty()) out += ' ';
    out += i < labels.size() ? labels[i] : std::to_string(i);
  }
  return out;
}

CommandResult failure(std::string const& command, int code, std::string const& kind, std::string const& message,
                      std::string witness) {
  if (witness.empty()) witness = message;
  CommandResult out;
  out.exit_code = code;
  out.report = Json{{"command", command},
                    {"status", code == kParse ? "parse-error" : "invalid"},
                    {"payload", Json{{"error", Json{{"kind", kind}, {"message", message}, {"witness", witness}}}}},
                    {"checks", Json::array({Json{{"name", kind}, {"pass", false}, {"witness", witness}}})}};
  return out;
}

// ------------------------------------------------------------- commands

SSpaceCheckOptions space_options(CommandOptions const& o) {
  SSpaceCheckOptions s;
  s.s4_cap = o.limit;
  s.seed = o.seed;
  return s;
}

ElementMap identity_map(std::size_t n) {
  ElementMap id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return id;
}

CommandResult cmd_validate(Document const& doc) {
  auto const& s = doc.algebra;
  Report r;
  r.pass("semilattice axioms");
  if (doc.monotone) r.pass("monotone operator is order-preserving");
  Json maps = Json::array();
  for (auto const& m : doc.maps) {
    r.pass("map " + m.name + " is a homomorphism");
    maps.push_back(Json{{"name", m.name}, {"target_size", m.hom.target.size()}, {"onto", is_onto(m.hom)}});
  }
  Json payload{{"size", s.size()},
               {"top", s.label(s.top())},
               {"covers", element_covers_json(s)},
               {"monotone", doc.monotone.has_value()},
               {"maps", std::move(maps)}};
  return finish("validate", std::move(payload), r);
}

CommandResult cmd_dual(Document const& doc, CommandOptions const& o) {
  auto const d = dual_space(doc.algebra);
  auto const& pts = d.space.labels();
  Json points = Json::array();
  for (std::size_t i = 0; i < d.points.size(); ++i)
    points.push_back(Json{{"name", pts[i]}, {"filter", set_json(d.points[i], doc.algebra.labels())}});
  Json beta = Json::object();
  for (Element a = 0; a < doc.algebra.size(); ++a) beta[doc.algebra.label(a)] = set_json(d.beta[a], pts);
  Json spec = Json::array();
  for (auto const& pair :
       covers_json(d.space.size(), [&](std::size_t x, std::size_t y) { return d.space.specializes(x, y); }))
    spec.push_back(Json::array({pts[pair[0].get<std::size_t>()], pts[pair[1].get<std::size_t>()]}));
  Json payload{{"points", std::move(points)},
               {"subbase", family_json(d.space.subbase(), pts)},
               {"s_sets", family_json(d.space.s_sets(), pts)},
               {"subbasic_closed", family_json(d.space.subbasic_closed(), pts)},
               {"beta", std::move(beta)},
               {"specialization", std::move(spec)}};
  auto out = finish("dual", std::move(payload), check_s_space(d.space, space_options(o)));
  out.dot = specialization_dot(d.space) + beta_dot(d);
  return out;
}

CommandResult cmd_canext(Document const& doc) {
  auto const& s = doc.algebra;
  auto const ce = build_extension(s);
  auto const co = closed_open_elements(ce);
  auto const& pts = ce.dual.space.labels();
  Json embedding = Json::object();
  for (Element a = 0; a < s.size(); ++a) embedding[s.label(a)] = set_json(ce.embed(a), pts);
  auto const& e = ce.elements;
  Json payload{{"elements", family_json(e, pts)},
               {"covers", covers_json(e.size(), [&](std::size_t i, std::size_t j) { return e[i].subset_of(e[j]); })},
               {"embedding", std::move(embedding)},
               {"closed", family_json(co.closed, pts)},
               {"open", family_json(co.open, pts)},
               {"saturated", family_json(ce.saturated, pts)}};
  Report r = canonical_extension_laws(s);
  if (all_filters(s).size() <= 32) {
    r.merge(gouveia_priestley(s).report, "completion: ");
    payload["completion"] = "checked";
  } else {
    payload["completion"] = "skipped";
  }
  auto out = finish("canext", std::move(payload), r);
  out.dot = specialization_dot(ce.dual.space);
  return out;
}

std::vector<std::pair<std::string, OrderMap>> maps_to_extend(Document const& doc, CommandOptions const& o) {
  std::vector<std::pair<std::string, OrderMap>> out;
  auto const& s = doc.algebra;
  if (doc.monotone) out.emplace_back("monotone", validate_order_map(s, s, *doc.monotone));
  for (auto const& m : doc.maps) out.emplace_back(m.name, validate_order_map(m.hom.source, m.hom.target, m.hom.map));
  if (out.empty()) out.emplace_back("id", validate_order_map(s, s, identity_map(s.size())));
  if (o.map) {
    auto const it = std::find_if(out.begin(), out.end(), [&](auto const& p) { return p.first == *o.map; });
    if (it == out.end()) throw ParseError("no map named \"" + *o.map + "\"");
    return {*it};
  }
  return out;
}

CommandResult cmd_extend(Document const& doc, CommandOptions const& o) {
  Json maps = Json::array();
  Report r;
  for (auto const& [name, f] : maps_to_extend(doc, o)) {
    MapExtension const ext(f);
    auto const& src = ext.source().dual.space.labels();
    auto const& tgt = ext.target().dual.space.labels();
    Json values = Json::array();
    for (auto v : ext.source().elements)
      values.push_back(Json{{"element", set_json(v, src)},
                            {"sigma", set_json(ext.sigma(v), tgt)},
                            {"pi", set_json(ext.pi(v), tgt)}});
    Json rf = Json::object();
    Json gf = Json::object();
    for (std::size_t p = 0; p < tgt.size(); ++p) {
      rf[tgt[p]] = family_json(ext.r().of_point[p], src);
      gf[tgt[p]] = family_json(ext.g().of_point[p], src);
    }
    maps.push_back(Json{{"name", name}, {"values", std::move(values)}, {"R_f", std::move(rf)}, {"G_f", std::move(gf)}});
    r.merge(extension_laws(f), name + ": ");
  }
  return finish("extend", Json{{"maps", std::move(maps)}}, r);
}

Json classes_json(Congruence const& theta, Labels const& labels) {
  Json out = Json::array();
  for (auto c : theta.classes()) out.push_back(set_json(c, labels));
  return out;
}

CommandResult cmd_congruences(Document const& doc) {
  auto const& s = doc.algebra;
  auto const d = dual_space(s);
  auto const cons = all_congruences(s);
  Json list = Json::array();
  for (auto const& theta : cons) {
    Json entry{{"classes", classes_json(theta, s.labels())},
               {"family", family_json(family_of_theta(s, theta).members, d.space.labels())}};
    if (doc.monotone) entry["monotone"] = is_congruence(s, theta, &*doc.monotone);
    list.push_back(std::move(entry));
  }
  Json payload{{"count", cons.size()},
               {"congruences", std::move(list)},
               {"covers", covers_json(cons.size(), [&](std::size_t i, std::size_t j) { return cons[i].refines(cons[j]); })}};
  Report r = congruence_laws(s);
  if (doc.monotone) {
    payload["monotone_count"] = all_congruences(s, &*doc.monotone).size();
    r.merge(congruence_laws(s, &*doc.monotone), "monotone: ");
  }
  auto out = finish("congruences", std::move(payload), r);
  out.dot = specialization_dot(d.space);
  return out;
}

std::string family_label(Family const& f, Labels const& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + format_subset(f[i], labels);
  return out + "}";
}

Json lattice_json(VietorisLattice const& v, Labels const& pts) {
  Labels s_labels;
  for (auto const& set : v.algebra.sets) s_labels.push_back(format_subset(set, pts));
  Json families = Json::array();
  for (std::size_t i = 0; i < v.families.size(); ++i)
    families.push_back(Json{{"members", family_json(v.families[i], pts)},
                            {"theta", classes_json(v.thetas[i], s_labels)}});
  return Json{{"count", v.families.size()},
              {"families", std::move(families)},
              {"covers", covers_json(v.families.size(), [&](std::size_t i, std::size_t j) { return v.leq[i][j]; })}};
}

std::string lattice_dot(VietorisLattice const& v, Labels const& pts) {
  std::string out = "digraph vietoris {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < v.families.size(); ++i)
    out += "  f" + std::to_string(i) + " [label=\"" + family_label(v.families[i], pts) + "\"];\n";
  for (auto const& pair : covers_json(v.families.size(), [&](std::size_t i, std::size_t j) { return v.leq[i][j]; }))
    out += "  f" + std::to_string(pair[0].get<std::size_t>()) + " -> f" + std::to_string(pair[1].get<std::size_t>()) +
           ";\n";
  return out + "}\n";
}

CommandResult cmd_vietoris(Document const& doc) {
  auto const& s = doc.algebra;
  auto const d = dual_space(s);
  auto const& pts = d.space.labels();
  auto const v = vietoris_lattice(d.space);
  Json payload = lattice_json(v, pts);
  Report r = v.report;
  std::string dot = lattice_dot(v, pts);
  if (doc.monotone) {
    auto const md = build_R_m(validate_monotone(s, *doc.monotone));
    auto const vm = vietoris_lattice(md.space);
    payload["monotone"] = lattice_json(vm, pts);
    r.merge(vm.report, "monotone: ");
  }
  auto out = finish("vietoris", std::move(payload), r);
  out.dot = std::move(dot);
  return out;
}

// One named verification suite; `run` is only called when reached.
struct Suite {
  std::string name;
  std::function<Report()> run;
};

std::vector<Suite> suites_for(Document const& doc, CommandOptions const& o) {
  auto const& s = doc.algebra;
  auto const op = doc.monotone.value_or(identity_map(s.size()));
  auto const sopts = space_options(o);
  std::vector<Suite> out;
  out.push_back({"order", [s] { return order_structure_laws(s); }});
  out.push_back({"s-space", [s, sopts] { return s_space_laws(s, sopts); }});
  out.push_back({"canonical extension", [s] { return canonical_extension_laws(s); }});
  if (all_filters(s).size() <= 32) out.push_back({"completion", [s] { return gouveia_priestley(s).report; }});
  out.push_back({"extension monotone", [s, op] { return extension_laws(validate_order_map(s, s, op)); }});
  for (auto const& m : doc.maps) {
    auto const h = m.hom;
    out.push_back({"extension " + m.name, [h] { return extension_laws(validate_order_map(h.source, h.target, h.map)); }});
  }
  out.push_back({"monotone duality", [s, op] { return duality_roundtrip(validate_monotone(s, op)); }});
  out.push_back({"congruences", [s] { return congruence_laws(s); }});
  if (doc.monotone) out.push_back({"monotone congruences", [s, op] { return congruence_laws(s, &op); }});
  for (auto const& m : doc.maps) {
    auto const h = m.hom;
    bool const endo = h.source == h.target && doc.monotone.has_value();
    out.push_back({"homomorphism " + m.name, [h, op, endo] {
                     Report r;
                     auto const rh = relation_of_homomorphism(h);
                     r.merge(meet_relation_check(rh), "R_h: ");
                     auto const da = dual_space(h.source);
                     auto const db = dual_space(h.target);
                     std::string w;
                     for (Element a = 0; a < h.source.size() && w.empty(); ++a)
                       if (box(rh, da.beta[a]) != db.beta[h(a)]) w = "a=" + h.source.label(a);
                     r.add("Box_R_h(beta(a)) = beta(h(a))", w.empty(), w);
                     bool const onto = is_onto(h);
                     r.add("R_h one-to-one iff h onto", is_one_to_one(rh) == onto,
                           onto ? "h onto, R_h not one-to-one" : "R_h one-to-one, h not onto");
                     if (endo) {
                       auto const md = build_R_m(validate_monotone(h.source, op));
                       bool const mh = is_monotone_homomorphism(h, op, op);
                       bool const mr = is_monotone_meet_relation(rh, md.space, md.space);
                       r.add("R_h monotone iff h monotone", mh == mr,
                             mh ? "h monotone, R_h not" : "R_h monotone, h not");
                       if (mh && onto) r.merge(induced_homeomorphism_check(h, op, op), "induced: ");
                     }
                     return r;
                   }});
  }
  return out;
}

// Runs suites in order.  Without `all` it stops at the first failing suite
// and keeps only the checks up to and including the first failure.
CommandResult cmd_verify_all(Document const& doc, CommandOptions const& o) {
  Report r;
  Json suites = Json::array();
  bool stopped = false;
  for (auto const& suite : suites_for(doc, o)) {
    auto const part = suite.run();
    std::size_t failures = 0;
    for (auto const& c : part.checks()) failures += c.pass ? 0 : 1;
    suites.push_back(Json{{"name", suite.name}, {"checks", part.checks().size()}, {"failures", failures}});
    if (failures > 0 && !o.all) {
      Report kept;
      for (auto const& c : part.checks()) {
        kept.add(c.name, c.pass, c.witness);
        if (!c.pass) break;
      }
      r.merge(kept, suite.name + ": ");
      stopped = true;
      break;
    }
    r.merge(part, suite.name + ": ");
  }
  Json payload{{"suites", std::move(suites)}, {"stopped_early", stopped}};
  if (auto const* c = r.first_failure())
    payload["first_failure"] = Json{{"name", c->name}, {"witness", c->witness}};
  return finish("verify-all", std::move(payload), r);
}

CommandResult cmd_enumerate(std::string const& input, CommandOptions const& o) {
  std::size_t n = 0;
  auto const* end = input.data() + input.size();
  auto const [ptr, ec] = std::from_chars(input.data(), end, n);
  if (ec != std::errc{} || ptr != end) throw ParseError("enumerate expects a size, got \"" + input + "\"");
  if (n < 1 || n > 7) throw Error(ErrorKind::CapExceeded, "enumerate supports sizes 1 to 7", {n});
  auto const all = semilattices_of_size(n);
  Json list = Json::array();
  Report r;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Json entry = algebra_to_json(all[i]);
    if (o.verify) {
      CommandOptions inner = o;
      inner.all = false;
      auto const v = cmd_verify_all(Document{all[i], std::nullopt, {}}, inner);
      bool const pass = v.exit_code == kOk;
      entry["verified"] = pass;
      std::string w;
      if (!pass) {
        auto const& f = v.report["payload"]["first_failure"];
        w = f["name"].get<std::string>() + ": " + f["witness"].get<std::string>();
      }
      r.add("semilattice " + std::to_string(i + 1) + " passes verify-all", pass, w);
    }
    list.push_back(std::move(entry));
  }
  if (!o.verify) r.pass("enumerated " + std::to_string(all.size()) + " isomorphism classes");
  Json payload{{"n", n}, {"count", all.size()}, {"semilattices", std::move(list)}};
  return finish("enumerate", std::move(payload), r);
}

Labels labels_of(Json const& j) {
  Labels out;
  if (j.is_object() && j.contains("elements") && j["elements"].is_array())
    for (auto const& e : j["elements"])
      if (e.is_string()) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

Document document_from_json(Json const& j) {
  require_keys(j, {"elements", "order", "meet", "top", "monotone", "maps"}, "document");
  Document doc{algebra_from_json(j), std::nullopt, {}};
  auto const& s = doc.algebra;
  if (j.contains("monotone")) doc.monotone = validate_monotone(s, map_from_json(j["monotone"], s, s, "monotone")).op;
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw ParseError("\"maps\" must be an object of named maps");
    for (auto const& [name, spec] : j["maps"].items()) {
      auto const where = "maps." + name;
      if (!spec.is_object() || !spec.contains("map")) throw ParseError(where + ": expected {\"map\": ...}");
      require_keys(spec, {"map", "target"}, where);
      auto const target = spec.contains("target") ? document_from_json(spec["target"]).algebra : s;
      auto map = map_from_json(spec["map"], s, target, where);
      doc.maps.push_back(NamedMap{name, validate_homomorphism(s, target, std::move(map))});
    }
  }
  return doc;
}

Document parse_document(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(e.what());
  }
  return document_from_json(j);
}

Json document_to_json(Document const& doc) {
  auto const& s = doc.algebra;
  Json out = algebra_to_json(s);
  if (doc.monotone) out["monotone"] = map_to_json(*doc.monotone, s, s);
  if (!doc.maps.empty()) {
    Json maps = Json::object();
    for (auto const& m : doc.maps) {
      Json entry{{"map", map_to_json(m.hom.map, s, m.hom.target)}};
      if (!(m.hom.target == s) || m.hom.target.labels() != s.labels()) entry["target"] = algebra_to_json(m.hom.target);
      maps[m.name] = std::move(entry);
    }
    out["maps"] = std::move(maps);
  }
  return out;
}

std::vector<std::string> const& command_names() {
  static std::vector<std::string> const names{"validate",    "dual",     "canext",     "extend",
                                              "congruences", "vietoris", "verify-all", "enumerate"};
  return names;
}

CommandResult run_command(std::string const& command, std::string const& input, CommandOptions const& options) {
  auto const& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    return failure(command, kParse, "UnknownCommand", "unknown command \"" + command + "\"", {});
  Labels labels;
  try {
    if (command == "enumerate") return cmd_enumerate(input, options);
    Json j;
    try {
      j = Json::parse(input);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(e.what());
    }
    labels = labels_of(j);
    auto const doc = document_from_json(j);
    if (command == "validate") return cmd_validate(doc);
    if (command == "dual") return cmd_dual(doc, options);
    if (command == "canext") return cmd_canext(doc);
    if (command == "extend") return cmd_extend(doc, options);
    if (command == "congruences") return cmd_congruences(doc);
    if (command == "vietoris") return cmd_vietoris(doc);
    return cmd_verify_all(doc, options);
  } catch (ParseError const& e) {
    return failure(command, kParse, "ParseError", e.what(), {});
  } catch (Error const& e) {
    return failure(command, kValidation, std::string(to_string(e.kind())), e.what(), witness_text(e.witness(), labels));
  }
}

}  // namespace semidual
