#include "gdesc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gdesc {

Report validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) return Report::broken("group", "empty carrier");
  if (static_cast<int>(g.mul.size()) != n * n ||
      static_cast<int>(g.inv.size()) != n)
    return Report::broken("group", "table length mismatch");
  for (int v : g.mul)
    if (v < 0 || v >= n) return Report::broken("group", "entry out of range");
  if (g.id < 0 || g.id >= n)
    return Report::broken("group", "identity out of range");
  for (int a = 0; a < n; ++a)
    if (g.op(g.id, a) != a || g.op(a, g.id) != a)
      return Report::fail("identity", std::to_string(a));
  for (int a = 0; a < n; ++a)
    if (g.op(g.inv[a], a) != g.id || g.op(a, g.inv[a]) != g.id)
      return Report::fail("inverse", std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          return Report::fail("associativity",
                              "(" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " +
                                  std::to_string(c) + ")");
  return Report::pass();
}

FiniteGroup group_from_table(int order, std::vector<int> mul) {
  FiniteGroup g;
  g.order = order;
  g.mul = std::move(mul);
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      if (g.op(e, a) != a || g.op(a, e) != a) ok = false;
    if (ok) id = e;
  }
  if (id < 0) throw std::invalid_argument("group_from_table: no identity");
  g.id = id;
  g.inv.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.op(a, b) == id && g.op(b, a) == id) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0)
      throw std::invalid_argument("group_from_table: missing inverse");
  }
  return g;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return group_from_table(n, std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  std::vector<int> mul(n * n);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int xa = 0; xa < a.order; ++xa)
    for (int xb = 0; xb < b.order; ++xb)
      for (int ya = 0; ya < a.order; ++ya)
        for (int yb = 0; yb < b.order; ++yb)
          mul[idx(xa, xb) * n + idx(ya, yb)] =
              idx(a.op(xa, ya), b.op(xb, yb));
  return group_from_table(n, std::move(mul));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symmetric: supported range is 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = (int)i;
  const int order = static_cast<int>(perms.size());
  std::vector<int> mul(order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      mul[a * order + b] = index[c];
    }
  return group_from_table(order, std::move(mul));
}

int element_order(const FiniteGroup& g, int a) {
  int x = a, k = 1;
  while (x != g.id) {
    x = g.op(x, a);
    ++k;
  }
  return k;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b)
      if (g.op(a, b) != g.op(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b,
                std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = a.order;
  if (next == n) return true;
  if (map[next] >= 0) return extend_iso(a, b, map, used, next + 1);
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    if (element_order(a, next) != element_order(b, img)) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x) {
      if (map[x] < 0) continue;
      const int xy = a.op(x, next), yx = a.op(next, x);
      if (map[xy] >= 0 && map[xy] != b.op(map[x], img)) ok = false;
      if (ok && map[yx] >= 0 && map[yx] != b.op(img, map[x])) ok = false;
    }
    if (ok && extend_iso(a, b, map, used, next + 1)) return true;
    map[next] = -1;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b) {
  if (a.order != b.order) return std::nullopt;
  std::vector<int> ord_a, ord_b;
  for (int x = 0; x < a.order; ++x) ord_a.push_back(element_order(a, x));
  for (int x = 0; x < b.order; ++x) ord_b.push_back(element_order(b, x));
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(a.order, -1);
  std::vector<bool> used(b.order, false);
  map[a.id] = b.id;
  used[b.id] = true;
  if (extend_iso(a, b, map, used, 0)) {
    // closure check; the search already maintained it, keep it cheap
    for (int x = 0; x < a.order; ++x)
      for (int y = 0; y < a.order; ++y)
        if (map[a.op(x, y)] != b.op(map[x], map[y])) return std::nullopt;
    return map;
  }
  return std::nullopt;
}

Report validate_action(const GroupAction& act) {
  const Report rg = validate_group(act.gamma);
  if (!rg.ok()) return rg;
  const Report ra = validate_group(act.a);
  if (!ra.ok()) return ra;
  const int n = act.gamma.order, m = act.a.order;
  if (static_cast<int>(act.aut.size()) != n)
    return Report::broken("action", "automorphism table length");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(act.aut[s].size()) != m)
      return Report::broken("action", "automorphism " + std::to_string(s));
    std::vector<bool> hit(m, false);
    for (int x : act.aut[s]) {
      if (x < 0 || x >= m)
        return Report::broken("action", "image out of range");
      hit[x] = true;
    }
    for (bool h : hit)
      if (!h) return Report::fail("action-bijective", std::to_string(s));
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (act.aut[s][act.a.op(x, y)] !=
            act.a.op(act.aut[s][x], act.aut[s][y]))
          return Report::fail("action-homomorphic", std::to_string(s));
  }
  for (int x = 0; x < m; ++x)
    if (act.aut[act.gamma.id][x] != x)
      return Report::fail("action-unit", std::to_string(x));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < m; ++x)
        if (act.aut[s][act.aut[t][x]] != act.aut[act.gamma.op(s, t)][x])
          return Report::fail("action-multiplicative",
                              "(" + std::to_string(s) + ", " +
                                  std::to_string(t) + ")");
  return Report::pass();
}

GroupAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& a) {
  GroupAction act{gamma, a, {}};
  act.aut.assign(gamma.order, std::vector<int>(a.order));
  for (int s = 0; s < gamma.order; ++s)
    for (int x = 0; x < a.order; ++x) act.aut[s][x] = x;
  return act;
}

GroupAction inversion_action(const FiniteGroup& gamma, const FiniteGroup& a,
                             const std::vector<int>& to_z2) {
  GroupAction act = trivial_action(gamma, a);
  for (int s = 0; s < gamma.order; ++s)
    if (to_z2[s] != 0)
      for (int x = 0; x < a.order; ++x) act.aut[s][x] = a.inv[x];
  return act;
}

FiniteGroupoid as_one_object_groupoid(const FiniteGroup& a) {
  FiniteGroupoid g;
  g.num_objects = 1;
  g.src.assign(a.order, 0);
  g.tgt.assign(a.order, 0);
  g.identity = {a.id};
  g.inverse = a.inv;
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y) g.set_comp(x, y, a.op(x, y));
  return g;
}

FiniteGroupoid action_groupoid(const FiniteGroup& g,
                               const std::vector<std::vector<int>>& perm,
                               int n) {
  FiniteGroupoid out;
  out.num_objects = n;
  const int nm = g.order * n;
  auto mor = [&](int s, int x) { return s * n + x; };
  out.src.resize(nm);
  out.tgt.resize(nm);
  out.inverse.resize(nm);
  out.identity.resize(n);
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < n; ++x) {
      out.src[mor(s, x)] = x;
      out.tgt[mor(s, x)] = perm[s][x];
      out.inverse[mor(s, x)] = mor(g.inv[s], perm[s][x]);
    }
  for (int x = 0; x < n; ++x) out.identity[x] = mor(g.id, x);
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < n; ++x)
      for (int t = 0; t < g.order; ++t)
        out.set_comp(mor(t, perm[s][x]), mor(s, x), mor(g.op(t, s), x));
  return out;
}

}  // namespace gdesc
