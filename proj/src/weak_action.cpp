#include "gdesc/weak_action.hpp"

#include <stdexcept>
#include <string>

#include "gdesc/equivalence.hpp"

namespace gdesc {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

Report validate_weak_action(const WeakAction& w) {
  const int n = w.gamma.order;
  {
    const Report r = validate_group(w.gamma);
    if (!r.ok()) return r;
  }
  if (!w.g) return Report::broken("weak-action", "missing carrier");
  if (static_cast<int>(w.mu.size()) != n ||
      static_cast<int>(w.alpha.size()) != n)
    return Report::broken("weak-action", "table length mismatch");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(w.alpha[s].size()) != n)
      return Report::broken("weak-action", "alpha row " + std::to_string(s));
    if (!same_groupoid(w.mu[s].source, w.g) ||
        !same_groupoid(w.mu[s].target, w.g))
      return Report::broken("weak-action", "mu(" + std::to_string(s) +
                                               ") endpoints");
    const Report r = validate_functor(w.mu[s]);
    if (!r.ok())
      return Report::broken("weak-action",
                            "mu(" + std::to_string(s) + "): " + r.to_string());
  }

  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      const NatIso& a = w.alpha[t][s];
      if (!a.from.same_maps(compose_functors(w.mu[t], w.mu[s])) ||
          !a.to.same_maps(w.mu[w.gamma.op(t, s)]))
        return Report::broken("weak-action",
                              "alpha(" + std::to_string(t) + ", " +
                                  std::to_string(s) + ") endpoints");
      const Report r = validate_nat_iso(a);
      if (!r.ok())
        return Report::fail("alpha-" + r.law,
                            "(" + std::to_string(t) + ", " +
                                std::to_string(s) + "): " + r.where);
    }
  {
    if (!w.beta.from.same_maps(w.mu[w.gamma.id]) ||
        !w.beta.to.same_maps(identity_functor(w.g)))
      return Report::broken("weak-action", "beta endpoints");
    const Report r = validate_nat_iso(w.beta);
    if (!r.ok()) return Report::fail("beta-" + r.law, r.where);
  }

  for (int s = 0; s < n; ++s) {
    const NatIso lw = left_whisker(w.mu[s], w.beta);
    if (lw.component != w.alpha[s][w.gamma.id].component)
      return Report::fail("unit-left", std::to_string(s));
    const NatIso rw = right_whisker(w.beta, w.mu[s]);
    if (rw.component != w.alpha[w.gamma.id][s].component)
      return Report::fail("unit-right", std::to_string(s));
  }

  // associativity: both composites mu(g).mu(t).mu(s) => mu(g t s)
  for (int gg = 0; gg < n; ++gg)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        const NatIso lhs = vcompose(w.alpha[w.gamma.op(gg, t)][s],
                                    right_whisker(w.alpha[gg][t], w.mu[s]));
        const NatIso rhs = vcompose(w.alpha[gg][w.gamma.op(t, s)],
                                    left_whisker(w.mu[gg], w.alpha[t][s]));
        if (lhs.component != rhs.component) {
          for (std::size_t x = 0; x < lhs.component.size(); ++x)
            if (lhs.component[x] != rhs.component[x])
              return Report::fail("associativity",
                                  triple(gg, t, s) + " at object " +
                                      std::to_string(x));
        }
      }
  return Report::pass();
}

WeakAction strict_action(const FiniteGroup& gamma, const GroupoidPtr& g,
                         const std::vector<GroupoidFunctor>& h) {
  if (static_cast<int>(h.size()) != gamma.order)
    throw std::invalid_argument("strict_action: wrong number of functors");
  const GroupoidFunctor idf = identity_functor(g);
  if (!h[gamma.id].same_maps(idf))
    throw std::invalid_argument("strict_action: h(e) is not the identity");
  for (int t = 0; t < gamma.order; ++t)
    for (int s = 0; s < gamma.order; ++s)
      if (!compose_functors(h[t], h[s]).same_maps(h[gamma.op(t, s)]))
        throw std::invalid_argument(
            "strict_action: h is not strictly multiplicative");

  WeakAction w;
  w.gamma = gamma;
  w.g = g;
  w.mu = h;
  w.alpha.resize(gamma.order);
  for (int t = 0; t < gamma.order; ++t) {
    w.alpha[t].resize(gamma.order);
    for (int s = 0; s < gamma.order; ++s) {
      NatIso a = identity_nat_iso(h[gamma.op(t, s)]);
      a.from = compose_functors(h[t], h[s]);
      w.alpha[t][s] = std::move(a);
    }
  }
  w.beta = identity_nat_iso(idf);
  w.beta.from = h[gamma.id];
  return w;
}

std::optional<WeakAction> twist_by_cochain(
    const WeakAction& w, const std::vector<std::vector<std::vector<int>>>& c) {
  const int n = w.gamma.order;
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("twist_by_cochain: cochain shape");
  WeakAction out = w;
  for (int t = 0; t < n; ++t) {
    if (static_cast<int>(c[t].size()) != n)
      throw std::invalid_argument("twist_by_cochain: cochain shape");
    for (int s = 0; s < n; ++s) {
      NatIso z;
      z.from = w.mu[w.gamma.op(t, s)];
      z.to = z.from;
      z.component = c[t][s];
      if (!validate_nat_iso(z).ok()) return std::nullopt;
      out.alpha[t][s] = vcompose(z, w.alpha[t][s]);
    }
  }
  if (!validate_weak_action(out).ok()) return std::nullopt;
  return out;
}

std::vector<std::vector<int>> natural_automorphisms(const GroupoidFunctor& f) {
  std::vector<std::vector<int>> out;
  for (const NatIso& a : enumerate_nat_isos(f, f)) out.push_back(a.component);
  return out;
}

WeakAction relabel_weak_action(const WeakAction& w,
                               const std::vector<int>& obj_perm,
                               const std::vector<int>& mor_perm) {
  WeakAction out;
  out.gamma = w.gamma;
  out.g = share(relabel_groupoid(*w.g, obj_perm, mor_perm));

  auto relabel_functor = [&](const GroupoidFunctor& f) {
    GroupoidFunctor r;
    r.source = out.g;
    r.target = out.g;
    r.obj_map.resize(f.obj_map.size());
    r.mor_map.resize(f.mor_map.size());
    for (std::size_t o = 0; o < f.obj_map.size(); ++o)
      r.obj_map[obj_perm[o]] = obj_perm[f.obj_map[o]];
    for (std::size_t m = 0; m < f.mor_map.size(); ++m)
      r.mor_map[mor_perm[m]] = mor_perm[f.mor_map[m]];
    return r;
  };
  auto relabel_iso = [&](const NatIso& a, const GroupoidFunctor& from,
                         const GroupoidFunctor& to) {
    NatIso r;
    r.from = from;
    r.to = to;
    r.component.resize(a.component.size());
    for (std::size_t x = 0; x < a.component.size(); ++x)
      r.component[obj_perm[x]] = mor_perm[a.component[x]];
    return r;
  };

  const int n = w.gamma.order;
  out.mu.resize(n);
  for (int s = 0; s < n; ++s) out.mu[s] = relabel_functor(w.mu[s]);
  out.alpha.resize(n);
  for (int t = 0; t < n; ++t) {
    out.alpha[t].resize(n);
    for (int s = 0; s < n; ++s)
      out.alpha[t][s] =
          relabel_iso(w.alpha[t][s], compose_functors(out.mu[t], out.mu[s]),
                      out.mu[w.gamma.op(t, s)]);
  }
  out.beta = relabel_iso(w.beta, out.mu[w.gamma.id], identity_functor(out.g));
  return out;
}

}  // namespace gdesc
