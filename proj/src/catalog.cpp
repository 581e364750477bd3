#include "gdesc/catalog.hpp"

#include <random>
#include <stdexcept>

namespace gdesc {

FiniteGroup z2() { return cyclic(2); }
FiniteGroup z3() { return cyclic(3); }
FiniteGroup z4() { return cyclic(4); }
FiniteGroup v4() { return direct_product(cyclic(2), cyclic(2)); }
FiniteGroup s3() { return symmetric(3); }

GroupoidFunctor make_functor(const GroupoidPtr& g, std::vector<int> obj_map,
                             std::vector<int> mor_map) {
  GroupoidFunctor f;
  f.source = g;
  f.target = g;
  f.obj_map = std::move(obj_map);
  f.mor_map = std::move(mor_map);
  return f;
}

WeakAction ba_strict_action(const GroupAction& theta) {
  const GroupoidPtr ba = share(as_one_object_groupoid(theta.a));
  std::vector<GroupoidFunctor> h(theta.gamma.order);
  for (int s = 0; s < theta.gamma.order; ++s)
    h[s] = make_functor(ba, {0}, theta.aut[s]);
  return strict_action(theta.gamma, ba, h);
}

WeakAction trivial_weak_action(const FiniteGroup& gamma, const GroupoidPtr& g) {
  std::vector<GroupoidFunctor> h(gamma.order, identity_functor(g));
  return strict_action(gamma, g, h);
}

std::optional<WeakAction> coboundary_twist(const GroupAction& theta,
                                           const std::vector<int>& b) {
  const FiniteGroup& gamma = theta.gamma;
  const FiniteGroup& a = theta.a;
  if (b[gamma.id] != a.id)
    throw std::invalid_argument("coboundary_twist: b[e] must be the unit");
  const WeakAction base = ba_strict_action(theta);
  const int n = gamma.order;
  std::vector<std::vector<std::vector<int>>> c(
      n, std::vector<std::vector<int>>(n));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      const int ts = gamma.op(t, s);
      // z[t][s] = theta_t(b_s) * b_ts^-1 * b_t, central in an abelian a
      const int z = a.op(a.op(theta.act(t, b[s]), a.inv[b[ts]]), b[t]);
      c[t][s] = {z};
    }
  return twist_by_cochain(base, c);
}

namespace {

struct Seed {
  std::string name;
  WeakAction action;
};

std::vector<int> swap_blocks(int block_size) {
  std::vector<int> out(2 * block_size);
  for (int i = 0; i < block_size; ++i) {
    out[i] = block_size + i;
    out[block_size + i] = i;
  }
  return out;
}

// strict action by a permutation representation pi (pi[t] o pi[s] = pi[ts])
// of gamma on the objects of a discrete groupoid
WeakAction discrete_permutation_action(const FiniteGroup& gamma,
                                       const std::vector<std::vector<int>>& pi,
                                       int n) {
  const GroupoidPtr g = share(discrete_groupoid(n));
  std::vector<GroupoidFunctor> h(gamma.order);
  for (int s = 0; s < gamma.order; ++s) h[s] = make_functor(g, pi[s], pi[s]);
  return strict_action(gamma, g, h);
}

std::vector<std::vector<int>> regular_representation(const FiniteGroup& g) {
  std::vector<std::vector<int>> pi(g.order, std::vector<int>(g.order));
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < g.order; ++x) pi[s][x] = g.op(s, x);
  return pi;
}

std::vector<Seed> strict_seeds() {
  std::vector<Seed> seeds;
  const std::vector<std::pair<std::string, FiniteGroup>> gammas = {
      {"Z2", z2()}, {"Z3", z3()}, {"V4", v4()}, {"S3", s3()}};
  const std::vector<std::pair<std::string, FiniteGroup>> coeffs = {
      {"Z2", z2()}, {"Z3", z3()}, {"Z4", z4()}, {"V4", v4()}, {"S3", s3()}};

  // trivial actions on one-object carriers
  for (const auto& [gn, gamma] : gammas)
    for (const auto& [an, a] : coeffs)
      seeds.push_back({gn + "-trivial-B" + an,
                       ba_strict_action(trivial_action(gamma, a))});

  // inversion actions through the available homomorphisms gamma -> Z/2
  const auto add_inversions = [&](const std::string& gn,
                                  const FiniteGroup& gamma,
                                  const std::vector<std::vector<int>>& homs) {
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (const auto& [an, a] : coeffs) {
        if (an == "S3" || an == "Z2" || an == "V4") continue;  // inversion trivial or nonabelian
        seeds.push_back(
            {gn + "-inv" + std::to_string(i) + "-B" + an,
             ba_strict_action(inversion_action(gamma, a, homs[i]))});
      }
  };
  add_inversions("Z2", z2(), {{0, 1}});
  {
    // the three surjections V4 -> Z/2
    add_inversions("V4", v4(), {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
  }
  {
    // sign character of S_3 (odd permutations invert)
    const FiniteGroup g = s3();
    std::vector<int> sign(g.order);
    for (int s = 0; s < g.order; ++s)
      sign[s] = element_order(g, s) == 2 ? 1 : 0;
    add_inversions("S3", g, {sign});
  }

  // permutation actions on discrete carriers
  seeds.push_back({"Z2-swap-disc2",
                   discrete_permutation_action(z2(), {{0, 1}, {1, 0}}, 2)});
  seeds.push_back(
      {"Z3-rot-disc3",
       discrete_permutation_action(
           z3(), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 3)});
  {
    const FiniteGroup g = s3();
    std::vector<std::vector<int>> pi(g.order, std::vector<int>(3));
    // recover the one-line form from the regular product on points
    // (elements of symmetric(3) are permutations in lexicographic order)
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int s = 0; s < g.order; ++s) pi[s] = perms[s];
    seeds.push_back({"S3-perm-disc3", discrete_permutation_action(g, pi, 3)});
  }
  seeds.push_back({"V4-regular-disc4",
                   discrete_permutation_action(v4(),
                                               regular_representation(v4()),
                                               4)});

  // component swap on a two-copy coproduct and on the pair groupoid
  {
    const FiniteGroupoid bz3 = as_one_object_groupoid(z3());
    const GroupoidPtr u = share(disjoint_union({&bz3, &bz3}).gpd);
    const GroupoidFunctor idf = identity_functor(u);
    const GroupoidFunctor sw = make_functor(u, {1, 0}, swap_blocks(3));
    seeds.push_back(
        {"Z2-swap-BZ3+BZ3", strict_action(z2(), u, {idf, sw})});
  }
  {
    const GroupoidPtr p = share(pair_groupoid(2));
    const GroupoidFunctor idf = identity_functor(p);
    const GroupoidFunctor sw = make_functor(p, {1, 0}, {3, 2, 1, 0});
    seeds.push_back({"Z2-swap-pair2", strict_action(z2(), p, {idf, sw})});
  }
  // trivial actions on richer carriers
  seeds.push_back(
      {"Z2-trivial-rich",
       trivial_weak_action(z2(), share(connected_rich_carrier()))});
  seeds.push_back(
      {"Z3-trivial-pair3", trivial_weak_action(z3(), share(pair_groupoid(3)))});
  return seeds;
}

}  // namespace

std::vector<NamedAction> weak_action_catalog(unsigned seed,
                                             std::size_t min_count) {
  std::vector<NamedAction> out;
  for (auto& s : strict_seeds()) {
    if (s.action.g->num_objects > 6 || s.action.g->num_morphisms() > 24)
      throw std::logic_error("catalog: carrier exceeds the size bound");
    out.push_back({s.name, std::move(s.action), true});
  }

  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, FiniteGroup>> gammas = {
      {"Z2", z2()}, {"Z3", z3()}, {"V4", v4()}, {"S3", s3()}};
  const std::vector<std::pair<std::string, FiniteGroup>> abelians = {
      {"Z2", z2()}, {"Z3", z3()}, {"Z4", z4()}, {"V4", v4()}};

  // coboundary twists of the abelian one-object seeds; every draw is a
  // valid weak action, keep the non-strict ones
  int round = 0;
  while (out.size() < min_count + 20) {
    bool progressed = false;
    for (const auto& [gn, gamma] : gammas)
      for (const auto& [an, a] : abelians) {
        std::vector<GroupAction> thetas = {trivial_action(gamma, a)};
        if (gn == "Z2" && (an == "Z3" || an == "Z4"))
          thetas.push_back(inversion_action(gamma, a, {0, 1}));
        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
          std::vector<int> b(gamma.order);
          b[gamma.id] = a.id;
          bool nontrivial = false;
          for (int s = 0; s < gamma.order; ++s) {
            if (s == gamma.id) continue;
            b[s] = static_cast<int>(rng() % a.order);
            if (b[s] != a.id) nontrivial = true;
          }
          if (!nontrivial) continue;
          auto tw = coboundary_twist(thetas[ti], b);
          if (!tw) continue;
          bool strict = true;
          for (int t = 0; t < gamma.order && strict; ++t)
            for (int s = 0; s < gamma.order && strict; ++s)
              if (tw->alpha[t][s].component !=
                  identity_nat_iso(tw->mu[gamma.op(t, s)]).component)
                strict = false;
          if (strict) continue;
          out.push_back({gn + "-twist" + std::to_string(round) + "-B" + an +
                             (ti ? "-inv" : ""),
                         std::move(*tw), false});
          progressed = true;
          if (out.size() >= min_count + 20) break;
        }
        if (out.size() >= min_count + 20) break;
      }
    if (!progressed) break;
    ++round;
  }
  return out;
}

std::vector<std::pair<std::string, FiniteGroupoid>> roundtrip_catalog() {
  std::vector<std::pair<std::string, FiniteGroupoid>> out;
  out.emplace_back("terminal", terminal_groupoid());
  out.emplace_back("disc2", discrete_groupoid(2));
  out.emplace_back("disc3", discrete_groupoid(3));
  out.emplace_back("disc4", discrete_groupoid(4));
  out.emplace_back("BZ2", as_one_object_groupoid(z2()));
  out.emplace_back("BZ3", as_one_object_groupoid(z3()));
  out.emplace_back("BZ4", as_one_object_groupoid(z4()));
  out.emplace_back("pair2", pair_groupoid(2));
  {
    const FiniteGroupoid bz2 = as_one_object_groupoid(z2());
    const FiniteGroupoid pt = terminal_groupoid();
    out.emplace_back("BZ2+pt", disjoint_union({&bz2, &pt}).gpd);
  }
  return out;
}

std::vector<std::pair<std::string, FiniteGroup>> roundtrip_groups() {
  return {{"Z2", z2()}, {"Z3", z3()}, {"V4", v4()}};
}

std::vector<std::pair<std::string, FiniteGroupoid>> hom_catalog() {
  std::vector<std::pair<std::string, FiniteGroupoid>> out;
  out.emplace_back("terminal", terminal_groupoid());
  out.emplace_back("disc2", discrete_groupoid(2));
  out.emplace_back("BZ2", as_one_object_groupoid(z2()));
  out.emplace_back("BZ3", as_one_object_groupoid(z3()));
  out.emplace_back("pair2", pair_groupoid(2));
  {
    const FiniteGroupoid bz2 = as_one_object_groupoid(z2());
    const FiniteGroupoid pt = terminal_groupoid();
    out.emplace_back("BZ2+pt", disjoint_union({&bz2, &pt}).gpd);
  }
  out.emplace_back("BS3", as_one_object_groupoid(s3()));
  return out;
}

std::vector<std::pair<std::string, GroupAction>> cohomology_fixtures() {
  std::vector<std::pair<std::string, GroupAction>> out;
  out.emplace_back("Z2-on-Z3-inversion",
                   inversion_action(z2(), z3(), {0, 1}));
  out.emplace_back("Z2-on-Z2-trivial", trivial_action(z2(), z2()));
  out.emplace_back("Z3-on-Z3-trivial", trivial_action(z3(), z3()));
  out.emplace_back("Z2-on-S3-trivial", trivial_action(z2(), s3()));
  // extras
  out.emplace_back("Z2-on-Z4-inversion",
                   inversion_action(z2(), z4(), {0, 1}));
  out.emplace_back("V4-on-Z3-inversion",
                   inversion_action(v4(), z3(), {0, 1, 0, 1}));
  {
    const FiniteGroup g = s3();
    std::vector<int> sign(g.order);
    for (int s = 0; s < g.order; ++s)
      sign[s] = element_order(g, s) == 2 ? 1 : 0;
    out.emplace_back("S3-on-Z3-sign", inversion_action(g, z3(), sign));
  }
  {
    // S_3 acting on itself by conjugation
    const FiniteGroup g = s3();
    GroupAction act{g, g, {}};
    act.aut.assign(g.order, std::vector<int>(g.order));
    for (int s = 0; s < g.order; ++s)
      for (int x = 0; x < g.order; ++x)
        act.aut[s][x] = g.op(g.op(s, x), g.inv[s]);
    out.emplace_back("S3-on-S3-conjugation", std::move(act));
  }
  return out;
}

namespace {

int replace_in_hom(const FiniteGroupoid& g, int current, int delta) {
  std::vector<int> hom;
  for (int m = 0; m < g.num_morphisms(); ++m)
    if (g.src[m] == g.src[current] && g.tgt[m] == g.tgt[current] &&
        m != current)
      hom.push_back(m);
  if (hom.empty())
    throw std::invalid_argument("perturbation needs a parallel morphism");
  return hom[(delta - 1) % hom.size()];
}

}  // namespace

GaloisDescentDatum perturb_psi(GaloisDescentDatum d, int t, int s, int x,
                               int delta) {
  d.psi[t][s].component[x] =
      replace_in_hom(*d.g, d.psi[t][s].component[x], delta);
  return d;
}

WeakAction perturb_alpha(WeakAction w, int t, int s, int x, int delta) {
  w.alpha[t][s].component[x] =
      replace_in_hom(*w.g, w.alpha[t][s].component[x], delta);
  return w;
}

DescentMorphism perturb_eta(DescentMorphism m, int s, int x, int delta) {
  m.eta[s].component[x] =
      replace_in_hom(*m.target.g, m.eta[s].component[x], delta);
  return m;
}

FiniteGroupoid connected_rich_carrier() {
  return product_groupoid(pair_groupoid(2), as_one_object_groupoid(z3()));
}

}  // namespace gdesc
