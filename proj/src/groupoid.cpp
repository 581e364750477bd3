#include "gdesc/groupoid.hpp"

#include <string>

namespace gdesc {

namespace {

std::string idx2(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}
std::string idx3(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

Report validate_groupoid(const FiniteGroupoid& g) {
  const int nm = g.num_morphisms();
  const int no = g.num_objects;

  if (no < 0 || static_cast<int>(g.tgt.size()) != nm)
    return Report::broken("tables", "src/tgt length mismatch");
  if (static_cast<int>(g.identity.size()) != no)
    return Report::broken("tables", "identity table has wrong length");
  if (static_cast<int>(g.inverse.size()) != nm)
    return Report::broken("tables", "inverse table has wrong length");

  for (int m = 0; m < nm; ++m) {
    if (g.src[m] < 0 || g.src[m] >= no || g.tgt[m] < 0 || g.tgt[m] >= no)
      return Report::broken("indexing", "morphism " + std::to_string(m));
    if (g.inverse[m] < 0 || g.inverse[m] >= nm)
      return Report::broken("indexing", "inverse of " + std::to_string(m));
  }
  for (int o = 0; o < no; ++o) {
    const int e = g.identity[o];
    if (e < 0 || e >= nm)
      return Report::broken("indexing", "identity of " + std::to_string(o));
    if (g.src[e] != o || g.tgt[e] != o)
      return Report::broken("typing", "identity of " + std::to_string(o));
  }
  for (const auto& [k, v] : g.comp) {
    if (v < 0 || v >= nm)
      return Report::broken("indexing", "composition entry " +
                                            std::to_string(v));
  }

  // composition defined exactly on composable pairs, with correct typing
  for (int a = 0; a < nm; ++a) {
    for (int b = 0; b < nm; ++b) {
      const int c = g.compose(a, b);
      const bool should = g.tgt[b] == g.src[a];
      if (should && c < 0)
        return Report::fail("totality", idx2(a, b));
      if (!should && c >= 0)
        return Report::fail("typing", idx2(a, b));
      if (c >= 0 && (g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a]))
        return Report::fail("typing", idx2(a, b));
    }
  }

  for (int m = 0; m < nm; ++m) {
    if (g.compose(g.identity[g.tgt[m]], m) != m ||
        g.compose(m, g.identity[g.src[m]]) != m)
      return Report::fail("identity", std::to_string(m));
  }

  for (int m = 0; m < nm; ++m) {
    const int i = g.inverse[m];
    if (g.src[i] != g.tgt[m] || g.tgt[i] != g.src[m])
      return Report::fail("inverse", std::to_string(m));
    if (g.compose(i, m) != g.identity[g.src[m]] ||
        g.compose(m, i) != g.identity[g.tgt[m]])
      return Report::fail("inverse", std::to_string(m));
  }

  // associativity over all composable triples: h after g after f
  for (int f = 0; f < nm; ++f) {
    for (int gm = 0; gm < nm; ++gm) {
      const int gf = g.compose(gm, f);
      if (gf < 0) continue;
      for (int h = 0; h < nm; ++h) {
        const int hg = g.compose(h, gm);
        if (hg < 0) continue;
        if (g.compose(h, gf) != g.compose(hg, f))
          return Report::fail("associativity", idx3(h, gm, f));
      }
    }
  }

  return Report::pass();
}

FiniteGroupoid terminal_groupoid() { return discrete_groupoid(1); }

FiniteGroupoid discrete_groupoid(int n) {
  FiniteGroupoid g;
  g.num_objects = n;
  g.src.resize(n);
  g.tgt.resize(n);
  g.identity.resize(n);
  g.inverse.resize(n);
  for (int o = 0; o < n; ++o) {
    g.src[o] = g.tgt[o] = o;
    g.identity[o] = o;
    g.inverse[o] = o;
  }
  for (int o = 0; o < n; ++o) g.set_comp(o, o, o);
  return g;
}

FiniteGroupoid pair_groupoid(int n) {
  FiniteGroupoid g;
  g.num_objects = n;
  auto mor = [n](int x, int y) { return x * n + y; };
  g.src.resize(n * n);
  g.tgt.resize(n * n);
  g.inverse.resize(n * n);
  g.identity.resize(n);
  for (int x = 0; x < n; ++x) {
    g.identity[x] = mor(x, x);
    for (int y = 0; y < n; ++y) {
      g.src[mor(x, y)] = x;
      g.tgt[mor(x, y)] = y;
      g.inverse[mor(x, y)] = mor(y, x);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) g.set_comp(mor(y, z), mor(x, y), mor(x, z));
  return g;
}

DisjointUnion disjoint_union(const std::vector<const FiniteGroupoid*>& parts) {
  DisjointUnion u;
  int obj = 0, mor = 0;
  for (const auto* p : parts) {
    u.obj_offset.push_back(obj);
    u.mor_offset.push_back(mor);
    obj += p->num_objects;
    mor += p->num_morphisms();
  }
  u.gpd.num_objects = obj;
  u.gpd.src.resize(mor);
  u.gpd.tgt.resize(mor);
  u.gpd.inverse.resize(mor);
  u.gpd.identity.resize(obj);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const FiniteGroupoid& p = *parts[i];
    const int oo = u.obj_offset[i], mo = u.mor_offset[i];
    for (int m = 0; m < p.num_morphisms(); ++m) {
      u.gpd.src[mo + m] = oo + p.src[m];
      u.gpd.tgt[mo + m] = oo + p.tgt[m];
      u.gpd.inverse[mo + m] = mo + p.inverse[m];
    }
    for (int o = 0; o < p.num_objects; ++o)
      u.gpd.identity[oo + o] = mo + p.identity[o];
    for (const auto& [k, v] : p.comp) {
      const int after = static_cast<int>(k / p.num_morphisms());
      const int before = static_cast<int>(k % p.num_morphisms());
      u.gpd.set_comp(mo + after, mo + before, mo + v);
    }
  }
  return u;
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a,
                                const FiniteGroupoid& b) {
  FiniteGroupoid g;
  const int bo = b.num_objects, bm = b.num_morphisms();
  g.num_objects = a.num_objects * bo;
  const int nm = a.num_morphisms() * bm;
  g.src.resize(nm);
  g.tgt.resize(nm);
  g.inverse.resize(nm);
  g.identity.resize(g.num_objects);
  auto mor = [bm](int ma, int mb) { return ma * bm + mb; };
  auto obj = [bo](int oa, int ob) { return oa * bo + ob; };
  for (int ma = 0; ma < a.num_morphisms(); ++ma)
    for (int mb = 0; mb < bm; ++mb) {
      const int m = mor(ma, mb);
      g.src[m] = obj(a.src[ma], b.src[mb]);
      g.tgt[m] = obj(a.tgt[ma], b.tgt[mb]);
      g.inverse[m] = mor(a.inverse[ma], b.inverse[mb]);
    }
  for (int oa = 0; oa < a.num_objects; ++oa)
    for (int ob = 0; ob < bo; ++ob)
      g.identity[obj(oa, ob)] = mor(a.identity[oa], b.identity[ob]);
  for (const auto& [ka, va] : a.comp) {
    const int aa = static_cast<int>(ka / a.num_morphisms());
    const int ab = static_cast<int>(ka % a.num_morphisms());
    for (const auto& [kb, vb] : b.comp) {
      const int ba = static_cast<int>(kb / bm);
      const int bb = static_cast<int>(kb % bm);
      g.set_comp(mor(aa, ba), mor(ab, bb), mor(va, vb));
    }
  }
  return g;
}

FiniteGroupoid power_groupoid(const FiniteGroupoid& g, int k) {
  FiniteGroupoid out = terminal_groupoid();
  for (int i = 0; i < k; ++i) out = product_groupoid(out, g);
  return out;
}

std::vector<int> iso_classes(const FiniteGroupoid& g) {
  std::vector<int> cls(g.num_objects, -1);
  int next = 0;
  for (int start = 0; start < g.num_objects; ++start) {
    if (cls[start] >= 0) continue;
    const int id = next++;
    std::vector<int> stack{start};
    cls[start] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int m = 0; m < g.num_morphisms(); ++m) {
        if (g.src[m] == x && cls[g.tgt[m]] < 0) {
          cls[g.tgt[m]] = id;
          stack.push_back(g.tgt[m]);
        }
        if (g.tgt[m] == x && cls[g.src[m]] < 0) {
          cls[g.src[m]] = id;
          stack.push_back(g.src[m]);
        }
      }
    }
  }
  return cls;
}

}  // namespace gdesc
