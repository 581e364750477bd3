#include "gdesc/document.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gdesc {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& what) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw DocumentError("unknown field '" + key + "' in " + what);
}

int get_int(const json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw DocumentError("missing integer '" + key + "' in " + what);
  return j[key].get<int>();
}

std::vector<int> get_ints(const json& j, const std::string& key,
                          const std::string& what) {
  if (!j.contains(key) || !j[key].is_array())
    throw DocumentError("missing array '" + key + "' in " + what);
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw DocumentError("non-integer entry in '" + key + "' of " + what);
    out.push_back(v.get<int>());
  }
  return out;
}

json groupoid_to_json(const FiniteGroupoid& g) {
  json j;
  j["objects"] = g.num_objects;
  json mors = json::array();
  for (int m = 0; m < g.num_morphisms(); ++m)
    mors.push_back({{"src", g.src[m]}, {"tgt", g.tgt[m]}});
  j["morphisms"] = std::move(mors);
  j["identity"] = g.identity;
  j["inverse"] = g.inverse;
  std::vector<std::array<int, 3>> triples;
  for (const auto& [k, v] : g.comp) {
    const int after = static_cast<int>(k / g.num_morphisms());
    const int before = static_cast<int>(k % g.num_morphisms());
    triples.push_back({after, before, v});
  }
  std::sort(triples.begin(), triples.end());
  json comp = json::array();
  for (const auto& t : triples) comp.push_back({t[0], t[1], t[2]});
  j["compose"] = std::move(comp);
  return j;
}

FiniteGroupoid groupoid_from_json(const json& j) {
  reject_unknown(j, {"kind", "objects", "morphisms", "identity", "inverse",
                     "compose", "provenance"},
                 "groupoid");
  FiniteGroupoid g;
  g.num_objects = get_int(j, "objects", "groupoid");
  if (g.num_objects < 0) throw DocumentError("negative object count");
  if (!j.contains("morphisms") || !j["morphisms"].is_array())
    throw DocumentError("missing morphisms array");
  for (const auto& m : j["morphisms"]) {
    if (!m.is_object()) throw DocumentError("bad morphism record");
    reject_unknown(m, {"src", "tgt"}, "morphism");
    g.src.push_back(get_int(m, "src", "morphism"));
    g.tgt.push_back(get_int(m, "tgt", "morphism"));
  }
  g.identity = get_ints(j, "identity", "groupoid");
  g.inverse = get_ints(j, "inverse", "groupoid");
  if (!j.contains("compose") || !j["compose"].is_array())
    throw DocumentError("missing compose table");
  const int nm = g.num_morphisms();
  for (const auto& t : j["compose"]) {
    if (!t.is_array() || t.size() != 3)
      throw DocumentError("bad compose triple");
    const int after = t[0].get<int>(), before = t[1].get<int>(),
              result = t[2].get<int>();
    if (after < 0 || after >= nm || before < 0 || before >= nm || result < 0 ||
        result >= nm)
      throw DocumentError("compose triple out of range");
    g.set_comp(after, before, result);
  }
  for (int m = 0; m < nm; ++m)
    if (g.src[m] < 0 || g.src[m] >= g.num_objects || g.tgt[m] < 0 ||
        g.tgt[m] >= g.num_objects)
      throw DocumentError("morphism endpoints out of range");
  if (static_cast<int>(g.identity.size()) != g.num_objects ||
      static_cast<int>(g.inverse.size()) != nm)
    throw DocumentError("identity/inverse table length mismatch");
  for (int e : g.identity)
    if (e < 0 || e >= nm) throw DocumentError("identity index out of range");
  for (int i : g.inverse)
    if (i < 0 || i >= nm) throw DocumentError("inverse index out of range");
  return g;
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  json rows = json::array();
  for (int a = 0; a < g.order; ++a) {
    json row = json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.op(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

FiniteGroup group_from_json(const json& j) {
  reject_unknown(j, {"kind", "order", "table"}, "group");
  const int order = get_int(j, "order", "group");
  if (order <= 0) throw DocumentError("group order must be positive");
  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != order)
    throw DocumentError("bad multiplication table");
  std::vector<int> mul;
  for (const auto& row : j["table"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw DocumentError("bad multiplication table row");
    for (const auto& v : row) {
      const int x = v.get<int>();
      if (x < 0 || x >= order)
        throw DocumentError("multiplication entry out of range");
      mul.push_back(x);
    }
  }
  try {
    return group_from_table(order, std::move(mul));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

json functor_to_json(const GroupoidFunctor& f) {
  return {{"objects", f.obj_map}, {"morphisms", f.mor_map}};
}

GroupoidFunctor functor_from_json(const json& j, const GroupoidPtr& src,
                                  const GroupoidPtr& tgt) {
  if (!j.is_object()) throw DocumentError("bad functor record");
  reject_unknown(j, {"objects", "morphisms"}, "functor");
  GroupoidFunctor f;
  f.source = src;
  f.target = tgt;
  f.obj_map = get_ints(j, "objects", "functor");
  f.mor_map = get_ints(j, "morphisms", "functor");
  if (static_cast<int>(f.obj_map.size()) != src->num_objects ||
      static_cast<int>(f.mor_map.size()) != src->num_morphisms())
    throw DocumentError("functor map length mismatch");
  for (int o : f.obj_map)
    if (o < 0 || o >= tgt->num_objects)
      throw DocumentError("functor object image out of range");
  for (int m : f.mor_map)
    if (m < 0 || m >= tgt->num_morphisms())
      throw DocumentError("functor morphism image out of range");
  return f;
}

json iso_to_json(const NatIso& a) { return {{"components", a.component}}; }

std::vector<int> iso_components_from_json(const json& j,
                                          const GroupoidPtr& src,
                                          const GroupoidPtr& tgt) {
  if (!j.is_object()) throw DocumentError("bad 2-morphism record");
  reject_unknown(j, {"components"}, "2-morphism");
  std::vector<int> c = get_ints(j, "components", "2-morphism");
  if (static_cast<int>(c.size()) != src->num_objects)
    throw DocumentError("2-morphism component length mismatch");
  for (int m : c)
    if (m < 0 || m >= tgt->num_morphisms())
      throw DocumentError("2-morphism component out of range");
  return c;
}

WeakAction weak_action_from_json(const json& j) {
  reject_unknown(j, {"kind", "group", "groupoid", "mu", "alpha", "beta"},
                 "weak_action");
  WeakAction w;
  if (!j.contains("group") || !j.contains("groupoid"))
    throw DocumentError("weak_action needs group and groupoid");
  w.gamma = group_from_json(j["group"]);
  w.g = share(groupoid_from_json(j["groupoid"]));
  const int n = w.gamma.order;
  if (!j.contains("mu") || !j["mu"].is_array() ||
      static_cast<int>(j["mu"].size()) != n)
    throw DocumentError("mu table length mismatch");
  for (const auto& f : j["mu"])
    w.mu.push_back(functor_from_json(f, w.g, w.g));
  if (!j.contains("alpha") || !j["alpha"].is_array() ||
      static_cast<int>(j["alpha"].size()) != n)
    throw DocumentError("alpha table length mismatch");
  w.alpha.resize(n);
  for (int t = 0; t < n; ++t) {
    const auto& row = j["alpha"][t];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw DocumentError("alpha row length mismatch");
    for (int s = 0; s < n; ++s) {
      NatIso a;
      a.from = compose_functors(w.mu[t], w.mu[s]);
      a.to = w.mu[w.gamma.op(t, s)];
      a.component = iso_components_from_json(row[s], w.g, w.g);
      w.alpha[t].push_back(std::move(a));
    }
  }
  if (!j.contains("beta")) throw DocumentError("missing beta");
  w.beta.from = w.mu[w.gamma.id];
  w.beta.to = identity_functor(w.g);
  w.beta.component = iso_components_from_json(j["beta"], w.g, w.g);
  return w;
}

json weak_action_to_json(const WeakAction& w) {
  json j;
  j["group"] = group_to_json(w.gamma);
  j["groupoid"] = groupoid_to_json(*w.g);
  json mu = json::array();
  for (const auto& f : w.mu) mu.push_back(functor_to_json(f));
  j["mu"] = std::move(mu);
  json alpha = json::array();
  for (const auto& row : w.alpha) {
    json r = json::array();
    for (const auto& a : row) r.push_back(iso_to_json(a));
    alpha.push_back(std::move(r));
  }
  j["alpha"] = std::move(alpha);
  j["beta"] = iso_to_json(w.beta);
  return j;
}

GaloisDescentDatum galois_from_json(const json& j) {
  reject_unknown(j, {"kind", "group", "groupoid", "f", "psi"},
                 "galois_datum");
  GaloisDescentDatum d;
  if (!j.contains("group") || !j.contains("groupoid"))
    throw DocumentError("galois_datum needs group and groupoid");
  d.gamma = group_from_json(j["group"]);
  d.g = share(groupoid_from_json(j["groupoid"]));
  const int n = d.gamma.order;
  if (!j.contains("f") || !j["f"].is_array() ||
      static_cast<int>(j["f"].size()) != n)
    throw DocumentError("f table length mismatch");
  for (const auto& f : j["f"]) d.f.push_back(functor_from_json(f, d.g, d.g));
  if (!j.contains("psi") || !j["psi"].is_array() ||
      static_cast<int>(j["psi"].size()) != n)
    throw DocumentError("psi table length mismatch");
  d.psi.resize(n);
  for (int t = 0; t < n; ++t) {
    const auto& row = j["psi"][t];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw DocumentError("psi row length mismatch");
    for (int s = 0; s < n; ++s) {
      NatIso p;
      p.from = compose_functors(d.f[s], d.f[t]);
      p.to = d.f[d.gamma.op(t, s)];
      p.component = iso_components_from_json(row[s], d.g, d.g);
      d.psi[t].push_back(std::move(p));
    }
  }
  return d;
}

json galois_to_json(const GaloisDescentDatum& d) {
  json j;
  j["group"] = group_to_json(d.gamma);
  j["groupoid"] = groupoid_to_json(*d.g);
  json f = json::array();
  for (const auto& ff : d.f) f.push_back(functor_to_json(ff));
  j["f"] = std::move(f);
  json psi = json::array();
  for (const auto& row : d.psi) {
    json r = json::array();
    for (const auto& p : row) r.push_back(iso_to_json(p));
    psi.push_back(std::move(r));
  }
  j["psi"] = std::move(psi);
  return j;
}

CoverDescentDatum cover_from_json(const json& j) {
  reject_unknown(j, {"kind", "group", "groupoid", "phi", "psi"},
                 "cover_datum");
  CoverDescentDatum c;
  if (!j.contains("group") || !j.contains("groupoid"))
    throw DocumentError("cover_datum needs group and groupoid");
  c.gamma = group_from_json(j["group"]);
  c.g = share(groupoid_from_json(j["groupoid"]));
  const int n = c.gamma.order;
  if (!j.contains("phi") || !j["phi"].is_array() ||
      static_cast<int>(j["phi"].size()) != n)
    throw DocumentError("phi block count mismatch");
  c.phi.resize(n);
  std::vector<bool> seen(n, false);
  for (const auto& block : j["phi"]) {
    if (!block.is_object()) throw DocumentError("bad phi block");
    reject_unknown(block, {"sigma", "functor"}, "phi block");
    const int s = get_int(block, "sigma", "phi block");
    if (s < 0 || s >= n || seen[s])
      throw DocumentError("bad phi block tag");
    seen[s] = true;
    if (!block.contains("functor")) throw DocumentError("phi block functor");
    c.phi[s] = functor_from_json(block["functor"], c.g, c.g);
  }
  if (!j.contains("psi") || !j["psi"].is_array() ||
      static_cast<int>(j["psi"].size()) != n * n)
    throw DocumentError("psi block count mismatch");
  c.psi.assign(n, std::vector<NatIso>(n));
  std::vector<bool> seen2(n * n, false);
  for (const auto& block : j["psi"]) {
    if (!block.is_object()) throw DocumentError("bad psi block");
    reject_unknown(block, {"tau", "sigma", "iso"}, "psi block");
    const int t = get_int(block, "tau", "psi block");
    const int s = get_int(block, "sigma", "psi block");
    if (t < 0 || t >= n || s < 0 || s >= n || seen2[t * n + s])
      throw DocumentError("bad psi block tag");
    seen2[t * n + s] = true;
    if (!block.contains("iso")) throw DocumentError("psi block iso");
    NatIso p;
    p.from = compose_functors(c.phi[s], c.phi[t]);
    p.to = c.phi[c.gamma.op(t, s)];
    p.component = iso_components_from_json(block["iso"], c.g, c.g);
    c.psi[t][s] = std::move(p);
  }
  return c;
}

json cover_to_json(const CoverDescentDatum& c) {
  json j;
  j["group"] = group_to_json(c.gamma);
  j["groupoid"] = groupoid_to_json(*c.g);
  const int n = c.gamma.order;
  json phi = json::array();
  for (int s = 0; s < n; ++s)
    phi.push_back({{"sigma", s}, {"functor", functor_to_json(c.phi[s])}});
  j["phi"] = std::move(phi);
  json psi = json::array();
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      psi.push_back(
          {{"tau", t}, {"sigma", s}, {"iso", iso_to_json(c.psi[t][s])}});
  j["psi"] = std::move(psi);
  return j;
}

DescentMorphism morphism_from_json(const json& j) {
  reject_unknown(j, {"kind", "source", "target", "functor", "eta"},
                 "descent_morphism");
  DescentMorphism m;
  if (!j.contains("source") || !j.contains("target"))
    throw DocumentError("descent_morphism needs source and target");
  m.source = galois_from_json(j["source"]);
  m.target = galois_from_json(j["target"]);
  if (!j.contains("functor")) throw DocumentError("missing functor");
  m.F = functor_from_json(j["functor"], m.source.g, m.target.g);
  const int n = m.source.gamma.order;
  if (!j.contains("eta") || !j["eta"].is_array() ||
      static_cast<int>(j["eta"].size()) != n)
    throw DocumentError("eta table length mismatch");
  for (int s = 0; s < n; ++s) {
    NatIso e;
    e.from = compose_functors(m.F, m.source.f[s]);
    e.to = compose_functors(m.target.f[s], m.F);
    e.component =
        iso_components_from_json(j["eta"][s], m.source.g, m.target.g);
    m.eta.push_back(std::move(e));
  }
  return m;
}

json morphism_to_json(const DescentMorphism& m) {
  json j;
  json src = galois_to_json(m.source);
  src["kind"] = "galois_datum";
  json tgt = galois_to_json(m.target);
  tgt["kind"] = "galois_datum";
  j["source"] = std::move(src);
  j["target"] = std::move(tgt);
  j["functor"] = functor_to_json(m.F);
  json eta = json::array();
  for (const auto& e : m.eta) eta.push_back(iso_to_json(e));
  j["eta"] = std::move(eta);
  return j;
}

}  // namespace

std::string serialize(const Document& doc) {
  json j;
  if (doc.kind == "groupoid") {
    j = groupoid_to_json(std::get<FiniteGroupoid>(doc.value));
    if (!doc.provenance.empty()) {
      json rows = json::array();
      for (const auto& [x, fam] : doc.provenance)
        rows.push_back({{"object", x}, {"family", fam}});
      j["provenance"] = std::move(rows);
    }
  } else if (doc.kind == "group") {
    j = group_to_json(std::get<FiniteGroup>(doc.value));
  } else if (doc.kind == "weak_action") {
    j = weak_action_to_json(std::get<WeakAction>(doc.value));
  } else if (doc.kind == "galois_datum") {
    j = galois_to_json(std::get<GaloisDescentDatum>(doc.value));
  } else if (doc.kind == "cover_datum") {
    j = cover_to_json(std::get<CoverDescentDatum>(doc.value));
  } else if (doc.kind == "descent_morphism") {
    j = morphism_to_json(std::get<DescentMorphism>(doc.value));
  } else {
    throw DocumentError("unknown document kind '" + doc.kind + "'");
  }
  j["kind"] = doc.kind;
  return j.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw DocumentError("document has no kind tag");
  Document doc;
  doc.kind = j["kind"].get<std::string>();
  if (doc.kind == "groupoid") {
    doc.value = groupoid_from_json(j);
    if (j.contains("provenance")) {
      if (!j["provenance"].is_array())
        throw DocumentError("bad provenance table");
      for (const auto& row : j["provenance"]) {
        reject_unknown(row, {"object", "family"}, "provenance row");
        doc.provenance.emplace_back(get_int(row, "object", "provenance"),
                                    get_ints(row, "family", "provenance"));
      }
    }
  } else if (doc.kind == "group") {
    doc.value = group_from_json(j);
  } else if (doc.kind == "weak_action") {
    doc.value = weak_action_from_json(j);
  } else if (doc.kind == "galois_datum") {
    doc.value = galois_from_json(j);
  } else if (doc.kind == "cover_datum") {
    doc.value = cover_from_json(j);
  } else if (doc.kind == "descent_morphism") {
    doc.value = morphism_from_json(j);
  } else {
    throw DocumentError("unknown document kind '" + doc.kind + "'");
  }
  return doc;
}

Document wrap(FiniteGroupoid g) {
  Document d;
  d.kind = "groupoid";
  d.value = std::move(g);
  return d;
}
Document wrap(FiniteGroup g) {
  Document d;
  d.kind = "group";
  d.value = std::move(g);
  return d;
}
Document wrap(WeakAction w) {
  Document d;
  d.kind = "weak_action";
  d.value = std::move(w);
  return d;
}
Document wrap(GaloisDescentDatum dd) {
  Document d;
  d.kind = "galois_datum";
  d.value = std::move(dd);
  return d;
}
Document wrap(CoverDescentDatum c) {
  Document d;
  d.kind = "cover_datum";
  d.value = std::move(c);
  return d;
}
Document wrap(DescentMorphism m) {
  Document d;
  d.kind = "descent_morphism";
  d.value = std::move(m);
  return d;
}
Document wrap_descended(const DescendedGroupoid& dg) {
  Document d;
  d.kind = "groupoid";
  d.value = dg.gpd;
  d.provenance = dg.objects;
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write '" + path + "'");
  out << text;
}

}  // namespace gdesc
