#include "gdesc/functor.hpp"

#include <stdexcept>
#include <string>

namespace gdesc {

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

GroupoidFunctor identity_functor(const GroupoidPtr& g) {
  GroupoidFunctor f;
  f.source = g;
  f.target = g;
  f.obj_map.resize(g->num_objects);
  f.mor_map.resize(g->num_morphisms());
  for (int o = 0; o < g->num_objects; ++o) f.obj_map[o] = o;
  for (int m = 0; m < g->num_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

Report validate_functor(const GroupoidFunctor& f) {
  if (!f.source || !f.target)
    return Report::broken("functor", "missing endpoint groupoid");
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;
  if (static_cast<int>(f.obj_map.size()) != s.num_objects ||
      static_cast<int>(f.mor_map.size()) != s.num_morphisms())
    return Report::broken("functor", "map length mismatch");
  for (int x : f.obj_map)
    if (x < 0 || x >= t.num_objects)
      return Report::broken("functor", "object image out of range");
  for (int m : f.mor_map)
    if (m < 0 || m >= t.num_morphisms())
      return Report::broken("functor", "morphism image out of range");

  for (int m = 0; m < s.num_morphisms(); ++m) {
    if (t.src[f.mor(m)] != f.obj(s.src[m]) ||
        t.tgt[f.mor(m)] != f.obj(s.tgt[m]))
      return Report::fail("functor-typing", std::to_string(m));
  }
  for (int o = 0; o < s.num_objects; ++o)
    if (f.mor(s.identity[o]) != t.identity[f.obj(o)])
      return Report::fail("functor-identity", std::to_string(o));
  for (const auto& [k, v] : s.comp) {
    const int after = static_cast<int>(k / s.num_morphisms());
    const int before = static_cast<int>(k % s.num_morphisms());
    if (t.compose(f.mor(after), f.mor(before)) != f.mor(v))
      return Report::fail("functor-composition", "(" + std::to_string(after) +
                                                     ", " +
                                                     std::to_string(before) +
                                                     ")");
  }
  return Report::pass();
}

GroupoidFunctor compose_functors(const GroupoidFunctor& f,
                                 const GroupoidFunctor& g) {
  if (!same_groupoid(g.target, f.source))
    throw std::invalid_argument("compose_functors: endpoint mismatch");
  GroupoidFunctor h;
  h.source = g.source;
  h.target = f.target;
  h.obj_map.resize(g.obj_map.size());
  h.mor_map.resize(g.mor_map.size());
  for (std::size_t o = 0; o < g.obj_map.size(); ++o)
    h.obj_map[o] = f.obj(g.obj_map[o]);
  for (std::size_t m = 0; m < g.mor_map.size(); ++m)
    h.mor_map[m] = f.mor(g.mor_map[m]);
  return h;
}

Report validate_nat_iso(const NatIso& a) {
  if (!same_groupoid(a.from.source, a.to.source) ||
      !same_groupoid(a.from.target, a.to.target))
    return Report::broken("nat-iso", "functors are not parallel");
  const FiniteGroupoid& s = *a.from.source;
  const FiniteGroupoid& t = *a.from.target;
  if (static_cast<int>(a.component.size()) != s.num_objects)
    return Report::broken("nat-iso", "component table has wrong length");
  for (int x = 0; x < s.num_objects; ++x) {
    const int c = a.component[x];
    if (c < 0 || c >= t.num_morphisms())
      return Report::broken("nat-iso", "component of " + std::to_string(x));
    if (t.src[c] != a.from.obj(x) || t.tgt[c] != a.to.obj(x))
      return Report::fail("nat-iso-typing", std::to_string(x));
  }
  for (int m = 0; m < s.num_morphisms(); ++m) {
    const int x = s.src[m], y = s.tgt[m];
    if (t.compose(a.component[y], a.from.mor(m)) !=
        t.compose(a.to.mor(m), a.component[x]))
      return Report::fail("naturality", std::to_string(m));
  }
  return Report::pass();
}

NatIso identity_nat_iso(const GroupoidFunctor& f) {
  NatIso a;
  a.from = f;
  a.to = f;
  a.component.resize(f.obj_map.size());
  for (std::size_t x = 0; x < f.obj_map.size(); ++x)
    a.component[x] = f.target->identity[f.obj_map[x]];
  return a;
}

NatIso inverse_nat_iso(const NatIso& a) {
  NatIso b;
  b.from = a.to;
  b.to = a.from;
  b.component.resize(a.component.size());
  for (std::size_t x = 0; x < a.component.size(); ++x)
    b.component[x] = a.from.target->inverse[a.component[x]];
  return b;
}

NatIso vcompose(const NatIso& b, const NatIso& a) {
  if (!a.to.same_maps(b.from) || !same_groupoid(a.to.target, b.from.target))
    throw std::invalid_argument("vcompose: endpoint mismatch");
  NatIso c;
  c.from = a.from;
  c.to = b.to;
  c.component.resize(a.component.size());
  const FiniteGroupoid& t = *a.from.target;
  for (std::size_t x = 0; x < a.component.size(); ++x) {
    c.component[x] = t.compose(b.component[x], a.component[x]);
    if (c.component[x] < 0)
      throw std::invalid_argument("vcompose: non-composable components");
  }
  return c;
}

NatIso left_whisker(const GroupoidFunctor& f, const NatIso& a) {
  if (!same_groupoid(a.from.target, f.source))
    throw std::invalid_argument("left_whisker: endpoint mismatch");
  NatIso b;
  b.from = compose_functors(f, a.from);
  b.to = compose_functors(f, a.to);
  b.component.resize(a.component.size());
  for (std::size_t x = 0; x < a.component.size(); ++x)
    b.component[x] = f.mor(a.component[x]);
  return b;
}

NatIso right_whisker(const NatIso& a, const GroupoidFunctor& f) {
  if (!same_groupoid(f.target, a.from.source))
    throw std::invalid_argument("right_whisker: endpoint mismatch");
  NatIso b;
  b.from = compose_functors(a.from, f);
  b.to = compose_functors(a.to, f);
  b.component.resize(f.obj_map.size());
  for (std::size_t x = 0; x < f.obj_map.size(); ++x)
    b.component[x] = a.component[f.obj_map[x]];
  return b;
}

bool nat_iso_equal(const NatIso& a, const NatIso& b) {
  return a.from.same_maps(b.from) && a.to.same_maps(b.to) &&
         a.component == b.component;
}

namespace {

// Extends a partial morphism map in morphism index order, pruning on typing,
// identities, inverses and composition as soon as both factors are assigned.
void extend_functor(const FiniteGroupoid& s, const FiniteGroupoid& t,
                    const std::vector<int>& obj_map, std::vector<int>& mor_map,
                    int next, std::vector<GroupoidFunctor>& out,
                    const GroupoidPtr& sp, const GroupoidPtr& tp) {
  const int nm = s.num_morphisms();
  if (next == nm) {
    GroupoidFunctor f;
    f.source = sp;
    f.target = tp;
    f.obj_map = obj_map;
    f.mor_map = mor_map;
    out.push_back(std::move(f));
    return;
  }
  for (int img = 0; img < t.num_morphisms(); ++img) {
    if (t.src[img] != obj_map[s.src[next]] ||
        t.tgt[img] != obj_map[s.tgt[next]])
      continue;
    mor_map[next] = img;
    bool ok = true;
    for (int o = 0; o < s.num_objects && ok; ++o)
      if (s.identity[o] == next && img != t.identity[obj_map[o]]) ok = false;
    if (ok && s.inverse[next] < next &&
        t.inverse[img] != mor_map[s.inverse[next]])
      ok = false;
    if (ok && s.inverse[next] == next && t.inverse[img] != img) ok = false;
    for (int m = 0; m <= next && ok; ++m) {
      int c = s.compose(next, m);
      if (c >= 0 && c <= next &&
          t.compose(img, mor_map[m]) != mor_map[c])
        ok = false;
      c = s.compose(m, next);
      if (c >= 0 && c <= next &&
          t.compose(mor_map[m], img) != mor_map[c])
        ok = false;
    }
    if (ok) extend_functor(s, t, obj_map, mor_map, next + 1, out, sp, tp);
  }
  mor_map[next] = -1;
}

}  // namespace

std::vector<GroupoidFunctor> enumerate_functors(const GroupoidPtr& a,
                                                const GroupoidPtr& b) {
  std::vector<GroupoidFunctor> out;
  const FiniteGroupoid& s = *a;
  const FiniteGroupoid& t = *b;
  if (s.num_objects > 0 && t.num_objects == 0) return out;
  std::vector<int> obj_map(s.num_objects, 0);
  while (true) {
    std::vector<int> mor_map(s.num_morphisms(), -1);
    extend_functor(s, t, obj_map, mor_map, 0, out, a, b);
    int i = s.num_objects - 1;
    while (i >= 0 && obj_map[i] == t.num_objects - 1) obj_map[i--] = 0;
    if (i < 0) break;
    ++obj_map[i];
  }
  return out;
}

std::vector<NatIso> enumerate_nat_isos(const GroupoidFunctor& f,
                                       const GroupoidFunctor& g) {
  std::vector<NatIso> out;
  if (!same_groupoid(f.source, g.source) ||
      !same_groupoid(f.target, g.target))
    return out;
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;
  const std::vector<int> cls = iso_classes(s);
  int ncls = 0;
  for (int c : cls) ncls = std::max(ncls, c + 1);

  // spanning tree: tree_edge[x] is a morphism reaching x from its root
  std::vector<int> root(ncls, -1), tree_edge(s.num_objects, -1),
      parent(s.num_objects, -1), order;
  for (int x = 0; x < s.num_objects; ++x)
    if (root[cls[x]] < 0) {
      root[cls[x]] = x;
      order.push_back(x);
      std::vector<int> stack{x};
      while (!stack.empty()) {
        const int y = stack.back();
        stack.pop_back();
        for (int m = 0; m < s.num_morphisms(); ++m) {
          int from = -1, to = -1, edge = -1;
          if (s.src[m] == y) { from = y; to = s.tgt[m]; edge = m; }
          else if (s.tgt[m] == y) { from = y; to = s.src[m]; edge = s.inverse[m]; }
          else continue;
          if (to != from && tree_edge[to] < 0 && root[cls[to]] != to) {
            tree_edge[to] = edge;  // edge: from -> to
            parent[to] = from;
            order.push_back(to);
            stack.push_back(to);
          }
        }
      }
    }

  std::vector<std::vector<int>> choices(ncls);
  for (int c = 0; c < ncls; ++c)
    choices[c] = t.hom(f.obj(root[c]), g.obj(root[c]));

  std::vector<int> pick(ncls, 0), comp(s.num_objects, -1);
  if (ncls == 0) {
    NatIso a;
    a.from = f;
    a.to = g;
    out.push_back(a);
    return out;
  }
  while (true) {
    bool feasible = true;
    for (int c = 0; c < ncls && feasible; ++c)
      if (choices[c].empty()) feasible = false;
    if (!feasible) break;
    for (int c = 0; c < ncls; ++c) comp[root[c]] = choices[c][pick[c]];
    bool ok = true;
    for (int x : order) {
      if (tree_edge[x] < 0) continue;
      // naturality along the tree edge m: parent -> x forces comp[x]
      const int m = tree_edge[x];
      const int lhs = t.compose(g.mor(m), comp[parent[x]]);
      const int c = t.compose(lhs, t.inverse[f.mor(m)]);
      if (c < 0) { ok = false; break; }
      comp[x] = c;
    }
    if (ok) {
      NatIso a;
      a.from = f;
      a.to = g;
      a.component = comp;
      if (validate_nat_iso(a).ok()) out.push_back(std::move(a));
    }
    int i = ncls - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(choices[i].size()))
      pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

}  // namespace gdesc
