#include "gdesc/descent_data.hpp"

#include <stdexcept>
#include <string>

namespace gdesc {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

// Shared structural checks for both encodings (they carry the same tables).
Report check_datum_structure(const FiniteGroup& gamma, const GroupoidPtr& g,
                             const std::vector<GroupoidFunctor>& f,
                             const std::vector<std::vector<NatIso>>& psi) {
  {
    const Report r = validate_group(gamma);
    if (!r.ok()) return r;
  }
  if (!g) return Report::broken("datum", "missing carrier");
  const int n = gamma.order;
  if (static_cast<int>(f.size()) != n || static_cast<int>(psi.size()) != n)
    return Report::broken("datum", "table length mismatch");
  for (int s = 0; s < n; ++s) {
    if (!same_groupoid(f[s].source, g) || !same_groupoid(f[s].target, g))
      return Report::broken("datum", "f(" + std::to_string(s) +
                                         ") endpoints");
    const Report r = validate_functor(f[s]);
    if (!r.ok())
      return Report::broken("datum",
                            "f(" + std::to_string(s) + "): " + r.to_string());
  }
  for (int t = 0; t < n; ++t) {
    if (static_cast<int>(psi[t].size()) != n)
      return Report::broken("datum", "psi row " + std::to_string(t));
    for (int s = 0; s < n; ++s) {
      const NatIso& p = psi[t][s];
      if (!p.from.same_maps(compose_functors(f[s], f[t])) ||
          !p.to.same_maps(f[gamma.op(t, s)]))
        return Report::broken("datum", "psi(" + std::to_string(t) + ", " +
                                           std::to_string(s) + ") endpoints");
      const Report r = validate_nat_iso(p);
      if (!r.ok())
        return Report::fail("psi-" + r.law,
                            "(" + std::to_string(t) + ", " +
                                std::to_string(s) + "): " + r.where);
    }
  }
  return Report::pass();
}

}  // namespace

Report validate_galois_datum(const GaloisDescentDatum& d) {
  const Report structural = check_datum_structure(d.gamma, d.g, d.f, d.psi);
  if (!structural.ok()) return structural;

  const int n = d.gamma.order;
  for (int gg = 0; gg < n; ++gg)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        // both routes f[s] . f[t] . f[gg] => f[gg t s]
        const NatIso lhs = vcompose(d.psi[d.gamma.op(gg, t)][s],
                                    left_whisker(d.f[s], d.psi[gg][t]));
        const NatIso rhs = vcompose(d.psi[gg][d.gamma.op(t, s)],
                                    right_whisker(d.psi[t][s], d.f[gg]));
        if (lhs.component != rhs.component)
          return Report::fail("cocycle", triple(gg, t, s));
      }
  return Report::pass();
}

CoverDescentDatum galois_to_cover(const GaloisDescentDatum& d) {
  return {d.gamma, d.g, d.f, d.psi};
}

GaloisDescentDatum cover_to_galois(const CoverDescentDatum& c) {
  return {c.gamma, c.g, c.phi, c.psi};
}

namespace {

// One functor between coproducts of copies of g, acting on block b by
// component[b] and sending block b to block b (the block bookkeeping of the
// overlap projections is carried by which component is placed where).
GroupoidFunctor block_functor(const GroupoidPtr& big, const DisjointUnion& u,
                              int blocks, const GroupoidPtr& g,
                              const std::vector<const GroupoidFunctor*>& comp) {
  GroupoidFunctor f;
  f.source = big;
  f.target = big;
  f.obj_map.resize(big->num_objects);
  f.mor_map.resize(big->num_morphisms());
  for (int b = 0; b < blocks; ++b) {
    for (int o = 0; o < g->num_objects; ++o)
      f.obj_map[u.obj_offset[b] + o] = u.obj_offset[b] + comp[b]->obj(o);
    for (int m = 0; m < g->num_morphisms(); ++m)
      f.mor_map[u.mor_offset[b] + m] = u.mor_offset[b] + comp[b]->mor(m);
  }
  return f;
}

NatIso block_nat_iso(const GroupoidFunctor& from, const GroupoidFunctor& to,
                     const DisjointUnion& u, int blocks, const GroupoidPtr& g,
                     const std::vector<const NatIso*>& comp) {
  NatIso a;
  a.from = from;
  a.to = to;
  a.component.resize(from.obj_map.size());
  for (int b = 0; b < blocks; ++b)
    for (int o = 0; o < g->num_objects; ++o)
      a.component[u.obj_offset[b] + o] = u.mor_offset[b] + comp[b]->at(o);
  return a;
}

}  // namespace

Report validate_cover_datum(const CoverDescentDatum& d) {
  const Report structural =
      check_datum_structure(d.gamma, d.g, d.phi, d.psi);
  if (!structural.ok()) return structural;

  const int n = d.gamma.order;

  // triple overlap: blocks (t, s), carriers the coproducts of |Gamma|^2
  // twisted copies; phi pulls back blockwise and psi assembles into one
  // 2-morphism, re-validated as such.
  {
    const int blocks = n * n;
    std::vector<const FiniteGroupoid*> copies(blocks, d.g.get());
    const DisjointUnion u = disjoint_union(copies);
    const GroupoidPtr big = share(u.gpd);
    std::vector<const GroupoidFunctor*> p12(blocks), p23(blocks), p13(blocks);
    std::vector<const NatIso*> psi_blocks(blocks);
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        const int b = t * n + s;
        p12[b] = &d.phi[t];  // ^s phi_t on the (t, s) block
        p23[b] = &d.phi[s];
        p13[b] = &d.phi[d.gamma.op(t, s)];
        psi_blocks[b] = &d.psi[t][s];
      }
    const GroupoidFunctor f12 = block_functor(big, u, blocks, d.g, p12);
    const GroupoidFunctor f23 = block_functor(big, u, blocks, d.g, p23);
    const GroupoidFunctor f13 = block_functor(big, u, blocks, d.g, p13);
    const NatIso big_psi = block_nat_iso(compose_functors(f23, f12), f13, u,
                                         blocks, d.g, psi_blocks);
    const Report r = validate_nat_iso(big_psi);
    if (!r.ok())
      return Report::fail("overlap-psi-" + r.law, r.where);
  }

  // quadruple overlap: blocks (gg, t, s); the four pullbacks of psi must
  // close the compatibility square.
  {
    const int blocks = n * n * n;
    std::vector<const FiniteGroupoid*> copies(blocks, d.g.get());
    const DisjointUnion u = disjoint_union(copies);
    const GroupoidPtr big = share(u.gpd);
    std::vector<const GroupoidFunctor*> p12(blocks), p23(blocks), p34(blocks),
        p13(blocks), p24(blocks), p14(blocks);
    std::vector<const NatIso*> c123(blocks), c234(blocks), c134(blocks),
        c124(blocks);
    for (int gg = 0; gg < n; ++gg)
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
          const int b = (gg * n + t) * n + s;
          const int gt = d.gamma.op(gg, t);
          const int ts = d.gamma.op(t, s);
          p12[b] = &d.phi[gg];
          p23[b] = &d.phi[t];
          p34[b] = &d.phi[s];
          p13[b] = &d.phi[gt];
          p24[b] = &d.phi[ts];
          p14[b] = &d.phi[d.gamma.op(gt, s)];
          c123[b] = &d.psi[gg][t];
          c234[b] = &d.psi[t][s];
          c134[b] = &d.psi[gt][s];
          c124[b] = &d.psi[gg][ts];
        }
    const GroupoidFunctor f12 = block_functor(big, u, blocks, d.g, p12);
    const GroupoidFunctor f23 = block_functor(big, u, blocks, d.g, p23);
    const GroupoidFunctor f34 = block_functor(big, u, blocks, d.g, p34);
    const GroupoidFunctor f13 = block_functor(big, u, blocks, d.g, p13);
    const GroupoidFunctor f24 = block_functor(big, u, blocks, d.g, p24);
    const GroupoidFunctor f14 = block_functor(big, u, blocks, d.g, p14);

    const NatIso psi123 = block_nat_iso(compose_functors(f23, f12), f13, u,
                                        blocks, d.g, c123);
    const NatIso psi234 = block_nat_iso(compose_functors(f34, f23), f24, u,
                                        blocks, d.g, c234);
    const NatIso psi134 = block_nat_iso(compose_functors(f34, f13), f14, u,
                                        blocks, d.g, c134);
    const NatIso psi124 = block_nat_iso(compose_functors(f24, f12), f14, u,
                                        blocks, d.g, c124);

    const NatIso lhs = vcompose(psi134, left_whisker(f34, psi123));
    const NatIso rhs = vcompose(psi124, right_whisker(psi234, f12));
    if (lhs.component != rhs.component) {
      for (std::size_t x = 0; x < lhs.component.size(); ++x)
        if (lhs.component[x] != rhs.component[x]) {
          const int b = u.obj_offset.empty()
                            ? 0
                            : static_cast<int>(x) / d.g->num_objects;
          const int s = b % n, t = (b / n) % n, gg = b / (n * n);
          return Report::fail("tetrahedron", triple(gg, t, s));
        }
    }
  }
  return Report::pass();
}

GaloisDescentDatum action_to_descent(const WeakAction& w) {
  GaloisDescentDatum d;
  d.gamma = w.gamma;
  d.g = w.g;
  const int n = w.gamma.order;
  d.f.resize(n);
  for (int s = 0; s < n; ++s) {
    // f_sigma = mu(sigma^-1) composed with the canonical identification,
    // which is the identity on underlying data
    const TwistedGroupoid twisted{w.g, s};
    d.f[s] = compose_functors(w.mu[w.gamma.inv[s]], twisted.can());
  }
  d.psi.resize(n);
  for (int t = 0; t < n; ++t) {
    d.psi[t].resize(n);
    for (int s = 0; s < n; ++s) {
      NatIso p;
      p.from = compose_functors(d.f[s], d.f[t]);
      p.to = d.f[d.gamma.op(t, s)];
      p.component = w.alpha[w.gamma.inv[s]][w.gamma.inv[t]].component;
      d.psi[t][s] = std::move(p);
    }
  }
  return d;
}

Report validate_descent_morphism(const DescentMorphism& m) {
  {
    const Report r1 = check_datum_structure(m.source.gamma, m.source.g,
                                            m.source.f, m.source.psi);
    if (!r1.ok()) return r1;
    const Report r2 = check_datum_structure(m.target.gamma, m.target.g,
                                            m.target.f, m.target.psi);
    if (!r2.ok()) return r2;
  }
  if (m.source.gamma.order != m.target.gamma.order ||
      m.source.gamma.mul != m.target.gamma.mul)
    return Report::broken("morphism", "group mismatch");
  if (!same_groupoid(m.F.source, m.source.g) ||
      !same_groupoid(m.F.target, m.target.g))
    return Report::broken("morphism", "functor endpoints");
  {
    const Report r = validate_functor(m.F);
    if (!r.ok()) return Report::broken("morphism", "F: " + r.to_string());
  }
  const int n = m.source.gamma.order;
  if (static_cast<int>(m.eta.size()) != n)
    return Report::broken("morphism", "eta table length");
  for (int s = 0; s < n; ++s) {
    const NatIso& e = m.eta[s];
    if (!e.from.same_maps(compose_functors(m.F, m.source.f[s])) ||
        !e.to.same_maps(compose_functors(m.target.f[s], m.F)))
      return Report::broken("morphism", "eta(" + std::to_string(s) +
                                            ") endpoints");
    const Report r = validate_nat_iso(e);
    if (!r.ok())
      return Report::fail("eta-" + r.law,
                          std::to_string(s) + ": " + r.where);
  }

  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      const int ts = m.source.gamma.op(t, s);
      const NatIso route_a =
          vcompose(m.eta[ts], left_whisker(m.F, m.source.psi[t][s]));
      const NatIso route_b = vcompose(
          right_whisker(m.target.psi[t][s], m.F),
          vcompose(left_whisker(m.target.f[s], m.eta[t]),
                   right_whisker(m.eta[s], m.source.f[t])));
      if (route_a.component != route_b.component)
        return Report::fail("prism", "(" + std::to_string(t) + ", " +
                                         std::to_string(s) + ")");
    }
  return Report::pass();
}

DescentMorphism identity_descent_morphism(const GaloisDescentDatum& d) {
  DescentMorphism m;
  m.source = d;
  m.target = d;
  m.F = identity_functor(d.g);
  m.eta.resize(d.gamma.order);
  for (int s = 0; s < d.gamma.order; ++s) {
    NatIso e = identity_nat_iso(d.f[s]);
    e.from = compose_functors(m.F, d.f[s]);
    e.to = compose_functors(d.f[s], m.F);
    m.eta[s] = std::move(e);
  }
  return m;
}

DescentMorphism compose_descent_morphisms(const DescentMorphism& second,
                                          const DescentMorphism& first) {
  DescentMorphism m;
  m.source = first.source;
  m.target = second.target;
  m.F = compose_functors(second.F, first.F);
  const int n = first.source.gamma.order;
  m.eta.resize(n);
  for (int s = 0; s < n; ++s) {
    NatIso e;
    e.from = compose_functors(m.F, m.source.f[s]);
    e.to = compose_functors(m.target.f[s], m.F);
    e.component.resize(first.source.g->num_objects);
    const FiniteGroupoid& t = *m.target.g;
    for (int x = 0; x < first.source.g->num_objects; ++x)
      e.component[x] = t.compose(second.eta[s].at(first.F.obj(x)),
                                 second.F.mor(first.eta[s].at(x)));
    m.eta[s] = std::move(e);
  }
  return m;
}

}  // namespace gdesc
