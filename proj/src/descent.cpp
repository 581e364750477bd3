#include "gdesc/descent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gdesc {

namespace {

// DFS over the element order: a value is forced as soon as some assigned
// pair multiplies to it, free otherwise; every fully assigned pair equation
// is re-checked incrementally.
void collect_families(const GaloisDescentDatum& d, int x,
                      std::vector<std::vector<int>>& hom_at,
                      std::vector<int>& phi, int next,
                      std::vector<std::vector<int>>& out) {
  const int n = d.gamma.order;
  const FiniteGroupoid& g = *d.g;
  if (next == n) {
    out.push_back(phi);
    return;
  }

  auto consistent = [&](int upto) {
    for (int t = 0; t <= upto; ++t)
      for (int s = 0; s <= upto; ++s) {
        const int ts = d.gamma.op(t, s);
        if (ts > upto) continue;
        const int want = g.compose(d.psi[t][s].at(x),
                                   g.compose(d.f[s].mor(phi[t]), phi[s]));
        if (phi[ts] != want) return false;
      }
    return true;
  };

  int forced = -1;
  for (int t = 0; t < next && forced < 0; ++t)
    for (int s = 0; s < next && forced < 0; ++s)
      if (d.gamma.op(t, s) == next)
        forced = g.compose(d.psi[t][s].at(x),
                           g.compose(d.f[s].mor(phi[t]), phi[s]));
  if (forced >= 0) {
    phi[next] = forced;
    if (consistent(next)) collect_families(d, x, hom_at, phi, next + 1, out);
    phi[next] = -1;
    return;
  }
  for (int m : hom_at[next]) {
    phi[next] = m;
    if (consistent(next)) collect_families(d, x, hom_at, phi, next + 1, out);
  }
  phi[next] = -1;
}

}  // namespace

DescendedGroupoid descend(const GaloisDescentDatum& d) {
  {
    const Report r = validate_galois_datum(d);
    if (!r.ok())
      throw std::invalid_argument("descend: invalid datum: " + r.to_string());
  }
  const FiniteGroupoid& g = *d.g;
  const int n = d.gamma.order;

  DescendedGroupoid out;
  out.base = d.g;
  for (int x = 0; x < g.num_objects; ++x) {
    std::vector<std::vector<int>> hom_at(n);
    for (int s = 0; s < n; ++s) hom_at[s] = g.hom(x, d.f[s].obj(x));
    std::vector<int> phi(n, -1);
    std::vector<std::vector<int>> families;
    collect_families(d, x, hom_at, phi, 0, families);
    std::sort(families.begin(), families.end());
    for (auto& fam : families) out.objects.emplace_back(x, std::move(fam));
  }

  const int nobj = static_cast<int>(out.objects.size());
  out.gpd.num_objects = nobj;
  std::map<std::tuple<int, int, int>, int> mor_index;
  for (int i = 0; i < nobj; ++i) {
    const auto& [xi, phi_i] = out.objects[i];
    for (int j = 0; j < nobj; ++j) {
      const auto& [xj, phi_j] = out.objects[j];
      for (int m : g.hom(xi, xj)) {
        bool ok = true;
        for (int s = 0; s < n && ok; ++s)
          if (g.compose(phi_j[s], m) != g.compose(d.f[s].mor(m), phi_i[s]))
            ok = false;
        if (!ok) continue;
        mor_index[{i, j, m}] = static_cast<int>(out.gpd.src.size());
        out.gpd.src.push_back(i);
        out.gpd.tgt.push_back(j);
        out.underlying.push_back(m);
      }
    }
  }
  const int nmor = static_cast<int>(out.gpd.src.size());
  out.gpd.identity.resize(nobj);
  out.gpd.inverse.resize(nmor);
  for (int i = 0; i < nobj; ++i)
    out.gpd.identity[i] =
        mor_index.at({i, i, g.identity[out.objects[i].first]});
  for (int k = 0; k < nmor; ++k) {
    const int i = out.gpd.src[k], j = out.gpd.tgt[k];
    out.gpd.inverse[k] = mor_index.at({j, i, g.inverse[out.underlying[k]]});
  }
  for (int b = 0; b < nmor; ++b)
    for (int a = 0; a < nmor; ++a) {
      if (out.gpd.tgt[b] != out.gpd.src[a]) continue;
      const int c = g.compose(out.underlying[a], out.underlying[b]);
      out.gpd.set_comp(a, b,
                       mor_index.at({out.gpd.src[b], out.gpd.tgt[a], c}));
    }

  out.forgetful.source = share(out.gpd);
  out.forgetful.target = d.g;
  out.forgetful.obj_map.resize(nobj);
  for (int i = 0; i < nobj; ++i)
    out.forgetful.obj_map[i] = out.objects[i].first;
  out.forgetful.mor_map = out.underlying;
  return out;
}

GroupoidFunctor descend_morphism(const DescentMorphism& m,
                                 const DescendedGroupoid& source,
                                 const DescendedGroupoid& target) {
  {
    const Report r = validate_descent_morphism(m);
    if (!r.ok())
      throw std::invalid_argument("descend_morphism: " + r.to_string());
  }
  const int n = m.source.gamma.order;
  const FiniteGroupoid& g2 = *m.target.g;

  std::map<std::pair<int, std::vector<int>>, int> obj_index;
  for (std::size_t i = 0; i < target.objects.size(); ++i)
    obj_index[target.objects[i]] = static_cast<int>(i);
  std::map<std::tuple<int, int, int>, int> mor_index;
  for (int k = 0; k < target.gpd.num_morphisms(); ++k)
    mor_index[{target.gpd.src[k], target.gpd.tgt[k], target.underlying[k]}] =
        k;

  GroupoidFunctor out;
  out.source = share(source.gpd);
  out.target = share(target.gpd);
  out.obj_map.resize(source.objects.size());
  for (std::size_t i = 0; i < source.objects.size(); ++i) {
    const auto& [x, phi] = source.objects[i];
    std::vector<int> image(n);
    for (int s = 0; s < n; ++s)
      image[s] = g2.compose(m.eta[s].at(x), m.F.mor(phi[s]));
    const auto it = obj_index.find({m.F.obj(x), image});
    if (it == obj_index.end())
      throw std::logic_error("descend_morphism: image family not descended");
    out.obj_map[i] = it->second;
  }
  out.mor_map.resize(source.gpd.num_morphisms());
  for (int k = 0; k < source.gpd.num_morphisms(); ++k)
    out.mor_map[k] = mor_index.at({out.obj_map[source.gpd.src[k]],
                                   out.obj_map[source.gpd.tgt[k]],
                                   m.F.mor(source.underlying[k])});
  return out;
}

namespace {

std::vector<int> digits(int value, int base, int count) {
  std::vector<int> out(count);
  for (int p = count - 1; p >= 0; --p) {
    out[p] = value % base;
    value /= base;
  }
  return out;
}

int undigits(const std::vector<int>& ds, int base) {
  int v = 0;
  for (int d : ds) v = v * base + d;
  return v;
}

}  // namespace

GaloisDescentDatum base_change_torsor(const FiniteGroupoid& h,
                                      const FiniteGroup& gamma) {
  const int n = gamma.order;
  GaloisDescentDatum d;
  d.gamma = gamma;
  d.g = share(power_groupoid(h, n));
  const int ho = h.num_objects, hm = h.num_morphisms();

  d.f.resize(n);
  for (int s = 0; s < n; ++s) {
    GroupoidFunctor& f = d.f[s];
    f.source = d.g;
    f.target = d.g;
    f.obj_map.resize(d.g->num_objects);
    f.mor_map.resize(d.g->num_morphisms());
    for (int o = 0; o < d.g->num_objects; ++o) {
      const std::vector<int> y = digits(o, ho, n);
      std::vector<int> z(n);
      for (int p = 0; p < n; ++p) z[p] = y[gamma.op(s, p)];
      f.obj_map[o] = undigits(z, ho);
    }
    for (int m = 0; m < d.g->num_morphisms(); ++m) {
      const std::vector<int> y = digits(m, hm, n);
      std::vector<int> z(n);
      for (int p = 0; p < n; ++p) z[p] = y[gamma.op(s, p)];
      f.mor_map[m] = undigits(z, hm);
    }
  }
  d.psi.resize(n);
  for (int t = 0; t < n; ++t) {
    d.psi[t].resize(n);
    for (int s = 0; s < n; ++s) {
      NatIso p = identity_nat_iso(d.f[gamma.op(t, s)]);
      p.from = compose_functors(d.f[s], d.f[t]);
      d.psi[t][s] = std::move(p);
    }
  }
  return d;
}

RoundtripResult roundtrip_check(const FiniteGroupoid& h,
                                const FiniteGroup& gamma, int budget) {
  RoundtripResult r;
  const GaloisDescentDatum d = base_change_torsor(h, gamma);
  const DescendedGroupoid desc = descend(d);
  r.descended_objects = desc.gpd.num_objects;
  r.equivalence = are_equivalent(share(desc.gpd), share(h), budget);
  return r;
}

std::vector<std::pair<int, int>> z2_pair_objects(const GaloisDescentDatum& d) {
  if (d.gamma.order != 2)
    throw std::invalid_argument("z2_pair_objects: group must be Z/2");
  const int e = d.gamma.id, s = 1 - d.gamma.id;
  const FiniteGroupoid& g = *d.g;
  if (!d.f[e].same_maps(identity_functor(d.g)))
    throw std::invalid_argument("z2_pair_objects: f_e must be the identity");
  for (int x = 0; x < g.num_objects; ++x) {
    if (d.psi[e][e].at(x) != g.identity[x] ||
        d.psi[e][s].at(x) != g.identity[d.f[s].obj(x)] ||
        d.psi[s][e].at(x) != g.identity[d.f[s].obj(x)])
      throw std::invalid_argument("z2_pair_objects: unit psi not strict");
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.num_objects; ++x)
    for (int m : g.hom(x, d.f[s].obj(x)))
      if (g.compose(d.psi[s][s].at(x), g.compose(d.f[s].mor(m), m)) ==
          g.identity[x])
        out.emplace_back(x, m);
  return out;
}

namespace {

// F(y)_p = F_p(y_p) for a tuple of downstairs functors.
GroupoidFunctor coordinatewise_functor(const GroupoidPtr& g1,
                                       const GroupoidPtr& g2,
                                       const FiniteGroupoid& h1,
                                       const FiniteGroupoid& h2,
                                       const std::vector<const GroupoidFunctor*>& fs) {
  const int n = static_cast<int>(fs.size());
  GroupoidFunctor F;
  F.source = g1;
  F.target = g2;
  F.obj_map.resize(g1->num_objects);
  F.mor_map.resize(g1->num_morphisms());
  for (int o = 0; o < g1->num_objects; ++o) {
    std::vector<int> y = digits(o, h1.num_objects, n);
    for (int p = 0; p < n; ++p) y[p] = fs[p]->obj(y[p]);
    F.obj_map[o] = undigits(y, h2.num_objects);
  }
  for (int m = 0; m < g1->num_morphisms(); ++m) {
    std::vector<int> y = digits(m, h1.num_morphisms(), n);
    for (int p = 0; p < n; ++p) y[p] = fs[p]->mor(y[p]);
    F.mor_map[m] = undigits(y, h2.num_morphisms());
  }
  return F;
}

struct UpstairsObject {
  GroupoidFunctor F;
  std::vector<NatIso> eta;
  std::vector<int> picks;  // downstairs functor index per coordinate
};

bool prism_holds(const GaloisDescentDatum& d1, const GaloisDescentDatum& d2,
                 const GroupoidFunctor& F, const std::vector<NatIso>& eta) {
  const int n = d1.gamma.order;
  const FiniteGroupoid& g2 = *d2.g;
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      const int ts = d1.gamma.op(t, s);
      for (int x = 0; x < d1.g->num_objects; ++x) {
        const int lhs =
            g2.compose(eta[ts].at(x), F.mor(d1.psi[t][s].at(x)));
        const int rhs = g2.compose(
            d2.psi[t][s].at(F.obj(x)),
            g2.compose(d2.f[s].mor(eta[t].at(x)),
                       eta[s].at(d1.f[t].obj(x))));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool modification_holds(const GaloisDescentDatum& d1,
                        const GaloisDescentDatum& d2, const UpstairsObject& a,
                        const UpstairsObject& b, const NatIso& m) {
  const int n = d1.gamma.order;
  const FiniteGroupoid& g2 = *d2.g;
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < d1.g->num_objects; ++x) {
      const int lhs = g2.compose(b.eta[s].at(x), m.at(d1.f[s].obj(x)));
      const int rhs = g2.compose(d2.f[s].mor(m.at(x)), a.eta[s].at(x));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

HomDescentReport hom_descent_check(const FiniteGroupoid& h1,
                                   const FiniteGroupoid& h2,
                                   const FiniteGroup& gamma, int max_objects,
                                   int max_morphisms) {
  HomDescentReport rep;
  if (h1.num_objects > max_objects || h2.num_objects > max_objects ||
      h1.num_morphisms() > max_morphisms ||
      h2.num_morphisms() > max_morphisms) {
    rep.undecided = true;
    rep.detail = "over budget";
    return rep;
  }
  const int n = gamma.order;
  const GroupoidPtr h1p = share(h1), h2p = share(h2);
  const GaloisDescentDatum d1 = base_change_torsor(h1, gamma);
  const GaloisDescentDatum d2 = base_change_torsor(h2, gamma);

  // downstairs category: functors h1 -> h2 and natural isomorphisms
  const std::vector<GroupoidFunctor> down = enumerate_functors(h1p, h2p);
  const int ndown = static_cast<int>(down.size());
  rep.downstairs_functors = ndown;
  std::vector<std::vector<std::vector<NatIso>>> down_nats(ndown);
  for (int a = 0; a < ndown; ++a) {
    down_nats[a].resize(ndown);
    for (int b = 0; b < ndown; ++b)
      down_nats[a][b] = enumerate_nat_isos(down[a], down[b]);
  }

  // everything upstairs lives over the cover: functors, eta and 2-cells act
  // coordinatewise, i.e. are tuples of downstairs cells
  auto tuple_component = [&](const std::vector<const NatIso*>& ns,
                             const std::vector<int>& reindex) {
    std::vector<int> comp(d1.g->num_objects);
    for (int o = 0; o < d1.g->num_objects; ++o) {
      const std::vector<int> y = digits(o, h1.num_objects, n);
      std::vector<int> c(n);
      for (int p = 0; p < n; ++p) c[p] = ns[p]->at(y[reindex[p]]);
      comp[o] = undigits(c, h2.num_morphisms());
    }
    return comp;
  };
  std::vector<int> straight(n);
  for (int p = 0; p < n; ++p) straight[p] = p;

  // upstairs objects: a tuple of downstairs functors per coordinate plus,
  // per sigma, a tuple of downstairs isos t_p: F_p => F_{sigma p} giving
  // eta_sigma(y)_p = t_p(y_{sigma p}); filtered by the compatibility prism
  std::vector<UpstairsObject> up;
  std::vector<int> pick(n, 0);
  if (ndown > 0) {
    while (true) {
      std::vector<const GroupoidFunctor*> fs(n);
      for (int p = 0; p < n; ++p) fs[p] = &down[pick[p]];
      const GroupoidFunctor F =
          coordinatewise_functor(d1.g, d2.g, h1, h2, fs);

      std::vector<std::vector<NatIso>> eta_cands(n);
      bool nonempty = true;
      for (int s = 0; s < n && nonempty; ++s) {
        std::vector<int> reindex(n);
        std::vector<std::vector<const NatIso*>> slots(n);
        for (int p = 0; p < n; ++p) {
          reindex[p] = gamma.op(s, p);
          for (const NatIso& t : down_nats[pick[p]][pick[reindex[p]]])
            slots[p].push_back(&t);
          if (slots[p].empty()) nonempty = false;
        }
        if (!nonempty) break;
        std::vector<int> tp(n, 0);
        while (true) {
          std::vector<const NatIso*> ns(n);
          for (int p = 0; p < n; ++p) ns[p] = slots[p][tp[p]];
          NatIso e;
          e.from = compose_functors(F, d1.f[s]);
          e.to = compose_functors(d2.f[s], F);
          e.component = tuple_component(ns, reindex);
          eta_cands[s].push_back(std::move(e));
          int i = n - 1;
          while (i >= 0 && tp[i] + 1 == static_cast<int>(slots[i].size()))
            tp[i--] = 0;
          if (i < 0) break;
          ++tp[i];
        }
        if (eta_cands[s].empty()) nonempty = false;
      }
      if (nonempty) {
        std::vector<int> epick(n, 0);
        while (true) {
          std::vector<NatIso> eta(n);
          for (int s = 0; s < n; ++s) eta[s] = eta_cands[s][epick[s]];
          if (prism_holds(d1, d2, F, eta))
            up.push_back({F, std::move(eta), pick});
          int i = n - 1;
          while (i >= 0 &&
                 epick[i] + 1 == static_cast<int>(eta_cands[i].size()))
            epick[i--] = 0;
          if (i < 0) break;
          ++epick[i];
        }
      }
      int i = n - 1;
      while (i >= 0 && pick[i] + 1 == ndown) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  }
  rep.descent_morphisms = static_cast<int>(up.size());

  // the canonical comparison: diagonal functor with identity eta
  auto diagonal = [&](int fi) {
    std::vector<const GroupoidFunctor*> fs(n, &down[fi]);
    UpstairsObject o;
    o.F = coordinatewise_functor(d1.g, d2.g, h1, h2, fs);
    o.eta.resize(n);
    for (int s = 0; s < n; ++s) {
      NatIso e = identity_nat_iso(compose_functors(o.F, d1.f[s]));
      e.to = compose_functors(d2.f[s], o.F);
      o.eta[s] = std::move(e);
    }
    return o;
  };
  // coordinatewise 2-cells between two upstairs objects
  auto two_cells = [&](const std::vector<int>& pa, const std::vector<int>& pb) {
    std::vector<std::vector<int>> cells;
    std::vector<std::vector<const NatIso*>> slots(n);
    for (int p = 0; p < n; ++p) {
      for (const NatIso& t : down_nats[pa[p]][pb[p]]) slots[p].push_back(&t);
      if (slots[p].empty()) return cells;
    }
    std::vector<int> tp(n, 0);
    while (true) {
      std::vector<const NatIso*> ns(n);
      for (int p = 0; p < n; ++p) ns[p] = slots[p][tp[p]];
      cells.push_back(tuple_component(ns, straight));
      int i = n - 1;
      while (i >= 0 && tp[i] + 1 == static_cast<int>(slots[i].size()))
        tp[i--] = 0;
      if (i < 0) break;
      ++tp[i];
    }
    return cells;
  };

  // essential surjectivity: every upstairs object reachable from a diagonal
  rep.essentially_surjective = true;
  for (std::size_t oi = 0; oi < up.size(); ++oi) {
    bool hit = false;
    for (int fi = 0; fi < ndown && !hit; ++fi) {
      const UpstairsObject diag = diagonal(fi);
      const std::vector<int> diag_picks(n, fi);
      for (const std::vector<int>& comp :
           two_cells(diag_picks, up[oi].picks)) {
        NatIso m;
        m.component = comp;
        if (modification_holds(d1, d2, diag, up[oi], m)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) {
      rep.essentially_surjective = false;
      rep.detail = "upstairs object misses every diagonal";
      break;
    }
  }

  // full faithfulness of the comparison on every pair of downstairs objects
  rep.fully_faithful = true;
  for (int ai = 0; ai < ndown && rep.fully_faithful; ++ai)
    for (int bi = 0; bi < ndown && rep.fully_faithful; ++bi) {
      const UpstairsObject da = diagonal(ai), db = diagonal(bi);
      std::vector<std::vector<int>> images;
      for (const NatIso& m_down : down_nats[ai][bi]) {
        std::vector<const NatIso*> ns(n, &m_down);
        images.push_back(tuple_component(ns, straight));
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        rep.fully_faithful = false;  // not injective
        rep.detail = "comparison not faithful";
        break;
      }
      std::vector<std::vector<int>> mods;
      for (const std::vector<int>& comp :
           two_cells(std::vector<int>(n, ai), std::vector<int>(n, bi))) {
        NatIso m;
        m.component = comp;
        if (modification_holds(d1, d2, da, db, m)) mods.push_back(comp);
      }
      std::sort(mods.begin(), mods.end());
      if (images != mods) {
        rep.fully_faithful = false;
        rep.detail = "comparison not full";
      }
    }

  return rep;
}

}  // namespace gdesc
