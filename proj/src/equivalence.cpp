#include "gdesc/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gdesc {

std::optional<EquivalenceWitness> functor_equivalence_witness(
    const GroupoidFunctor& f) {
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;
  EquivalenceWitness w;
  w.forward = f;

  w.full = true;
  w.faithful = true;
  for (int x = 0; x < s.num_objects && w.full && w.faithful; ++x)
    for (int y = 0; y < s.num_objects && w.full && w.faithful; ++y) {
      const std::vector<int> dom = s.hom(x, y);
      const std::vector<int> cod = t.hom(f.obj(x), f.obj(y));
      std::vector<int> image;
      for (int m : dom) image.push_back(f.mor(m));
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        w.faithful = false;
      std::vector<int> sorted_cod = cod;
      std::sort(sorted_cod.begin(), sorted_cod.end());
      if (image != sorted_cod) {
        if (image.size() < sorted_cod.size()) w.full = false;
        else if (!std::includes(sorted_cod.begin(), sorted_cod.end(),
                                image.begin(), image.end()))
          return std::nullopt;  // image leaves the hom set: not a functor
      }
    }
  if (!w.full || !w.faithful) return std::nullopt;

  for (int z = 0; z < t.num_objects; ++z) {
    int found = -1, iso = -1;
    for (int x = 0; x < s.num_objects && found < 0; ++x) {
      const std::vector<int> h = t.hom(f.obj(x), z);
      if (!h.empty()) {
        found = x;
        iso = h.front();
      }
    }
    if (found < 0) return std::nullopt;
    w.essential.emplace_back(found, iso);
  }
  return w;
}

SkeletonResult skeleton(const GroupoidPtr& g) {
  SkeletonResult r;
  r.class_of = iso_classes(*g);
  int ncls = 0;
  for (int c : r.class_of) ncls = std::max(ncls, c + 1);
  r.rep.assign(ncls, -1);
  for (int x = 0; x < g->num_objects; ++x)
    if (r.rep[r.class_of[x]] < 0) r.rep[r.class_of[x]] = x;

  r.connect.assign(g->num_objects, -1);
  for (int x = 0; x < g->num_objects; ++x) {
    const int target = r.rep[r.class_of[x]];
    if (x == target) {
      r.connect[x] = g->identity[x];
      continue;
    }
    // breadth-first over morphisms to find some iso x -> rep
    std::vector<int> via(g->num_objects, -1);
    via[x] = g->identity[x];
    std::vector<int> queue{x};
    for (std::size_t qi = 0; qi < queue.size() && r.connect[x] < 0; ++qi) {
      const int y = queue[qi];
      for (int m = 0; m < g->num_morphisms(); ++m) {
        int from = -1, to = -1, step = -1;
        if (g->src[m] == y) { from = y; to = g->tgt[m]; step = m; }
        else if (g->tgt[m] == y) { from = y; to = g->src[m]; step = g->inverse[m]; }
        else continue;
        if (via[to] >= 0) continue;
        via[to] = g->compose(step, via[from]);
        queue.push_back(to);
        if (to == target) {
          r.connect[x] = via[to];
          break;
        }
      }
    }
    if (r.connect[x] < 0)
      throw std::logic_error("skeleton: disconnected iso class");
  }

  // skeleton carrier: automorphisms of each representative
  FiniteGroupoid sk;
  sk.num_objects = ncls;
  std::vector<std::vector<int>> auts(ncls);
  std::vector<int> sk_index(g->num_morphisms(), -1);
  for (int c = 0; c < ncls; ++c) {
    auts[c] = g->hom(r.rep[c], r.rep[c]);
    for (int m : auts[c]) {
      sk_index[m] = static_cast<int>(sk.src.size());
      sk.src.push_back(c);
      sk.tgt.push_back(c);
    }
  }
  sk.identity.resize(ncls);
  sk.inverse.resize(sk.src.size());
  for (int c = 0; c < ncls; ++c) sk.identity[c] = sk_index[g->identity[r.rep[c]]];
  for (int c = 0; c < ncls; ++c)
    for (int m : auts[c]) {
      sk.inverse[sk_index[m]] = sk_index[g->inverse[m]];
      for (int m2 : auts[c])
        sk.set_comp(sk_index[m2], sk_index[m], sk_index[g->compose(m2, m)]);
    }
  r.skeleton = std::move(sk);

  GroupoidPtr skp = share(r.skeleton);
  r.inclusion.source = skp;
  r.inclusion.target = g;
  r.inclusion.obj_map = r.rep;
  r.inclusion.mor_map.resize(skp->num_morphisms());
  for (int m = 0; m < g->num_morphisms(); ++m)
    if (sk_index[m] >= 0) r.inclusion.mor_map[sk_index[m]] = m;

  r.retraction.source = g;
  r.retraction.target = skp;
  r.retraction.obj_map = r.class_of;
  r.retraction.mor_map.resize(g->num_morphisms());
  for (int m = 0; m < g->num_morphisms(); ++m) {
    // conjugate into the representative vertex group
    const int x = g->src[m], y = g->tgt[m];
    const int a = g->compose(r.connect[y], g->compose(m, g->inverse[r.connect[x]]));
    r.retraction.mor_map[m] = sk_index[a];
  }
  return r;
}

std::pair<FiniteGroup, std::vector<int>> automorphism_group(
    const FiniteGroupoid& g, int x) {
  const std::vector<int> auts = g.hom(x, x);
  std::map<int, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = (int)i;
  const int n = static_cast<int>(auts.size());
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[i * n + j] = index.at(g.compose(auts[i], auts[j]));
  return {group_from_table(n, std::move(mul)), auts};
}

namespace {

// Tries to match classes of a to classes of b bijectively with isomorphic
// automorphism groups; returns per-a-class the matched b-class and group map.
bool match_classes(const std::vector<FiniteGroup>& ga,
                   const std::vector<FiniteGroup>& gb, std::vector<int>& match,
                   std::vector<std::vector<int>>& gmaps,
                   std::vector<bool>& used, std::size_t next) {
  if (next == ga.size()) return true;
  for (std::size_t j = 0; j < gb.size(); ++j) {
    if (used[j]) continue;
    if (ga[next].order != gb[j].order) continue;
    auto iso = group_isomorphism(ga[next], gb[j]);
    if (!iso) continue;
    match[next] = static_cast<int>(j);
    gmaps[next] = *iso;
    used[j] = true;
    if (match_classes(ga, gb, match, gmaps, used, next + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

EquivResult are_equivalent(const GroupoidPtr& g, const GroupoidPtr& h,
                           int budget) {
  EquivResult res;
  SkeletonResult sg = skeleton(g);
  SkeletonResult sh = skeleton(h);
  if (sg.skeleton.num_morphisms() > budget ||
      sh.skeleton.num_morphisms() > budget) {
    res.outcome = EquivResult::Outcome::Undecided;
    return res;
  }
  if (sg.skeleton.num_objects != sh.skeleton.num_objects ||
      sg.skeleton.num_morphisms() != sh.skeleton.num_morphisms()) {
    res.outcome = EquivResult::Outcome::Inequivalent;
    return res;
  }
  const int ncls = sg.skeleton.num_objects;
  std::vector<FiniteGroup> ga, gb;
  std::vector<std::vector<int>> mor_a(ncls), mor_b(ncls);
  for (int c = 0; c < ncls; ++c) {
    auto [grp_a, mors_a] = automorphism_group(*g, sg.rep[c]);
    auto [grp_b, mors_b] = automorphism_group(*h, sh.rep[c]);
    ga.push_back(std::move(grp_a));
    gb.push_back(std::move(grp_b));
    mor_a[c] = std::move(mors_a);
    mor_b[c] = std::move(mors_b);
  }
  std::vector<int> match(ncls, -1);
  std::vector<std::vector<int>> gmaps(ncls);
  std::vector<bool> used(ncls, false);
  if (!match_classes(ga, gb, match, gmaps, used, 0)) {
    res.outcome = EquivResult::Outcome::Inequivalent;
    return res;
  }

  // assemble the forward functor g -> h through the matched representatives
  GroupoidFunctor f;
  f.source = g;
  f.target = h;
  f.obj_map.resize(g->num_objects);
  f.mor_map.resize(g->num_morphisms());
  std::vector<std::map<int, int>> index_a(ncls);
  for (int c = 0; c < ncls; ++c)
    for (std::size_t i = 0; i < mor_a[c].size(); ++i)
      index_a[c][mor_a[c][i]] = static_cast<int>(i);
  for (int x = 0; x < g->num_objects; ++x)
    f.obj_map[x] = sh.rep[match[sg.class_of[x]]];
  for (int m = 0; m < g->num_morphisms(); ++m) {
    const int x = g->src[m], y = g->tgt[m];
    const int c = sg.class_of[x];
    const int a = g->compose(sg.connect[y],
                             g->compose(m, g->inverse[sg.connect[x]]));
    f.mor_map[m] = mor_b[match[c]][gmaps[c][index_a[c].at(a)]];
  }

  auto witness = functor_equivalence_witness(f);
  if (!witness) {
    res.outcome = EquivResult::Outcome::Inequivalent;
    return res;
  }
  res.outcome = EquivResult::Outcome::Equivalent;
  res.witness = std::move(*witness);
  return res;
}

FiniteGroupoid relabel_groupoid(const FiniteGroupoid& g,
                                const std::vector<int>& obj_perm,
                                const std::vector<int>& mor_perm) {
  FiniteGroupoid out;
  out.num_objects = g.num_objects;
  out.src.resize(g.num_morphisms());
  out.tgt.resize(g.num_morphisms());
  out.inverse.resize(g.num_morphisms());
  out.identity.resize(g.num_objects);
  for (int m = 0; m < g.num_morphisms(); ++m) {
    out.src[mor_perm[m]] = obj_perm[g.src[m]];
    out.tgt[mor_perm[m]] = obj_perm[g.tgt[m]];
    out.inverse[mor_perm[m]] = mor_perm[g.inverse[m]];
  }
  for (int o = 0; o < g.num_objects; ++o)
    out.identity[obj_perm[o]] = mor_perm[g.identity[o]];
  for (const auto& [k, v] : g.comp) {
    const int after = static_cast<int>(k / g.num_morphisms());
    const int before = static_cast<int>(k % g.num_morphisms());
    out.set_comp(mor_perm[after], mor_perm[before], mor_perm[v]);
  }
  return out;
}

}  // namespace gdesc
