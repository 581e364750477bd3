#include <algorithm>
#include <set>

#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/descent.hpp"
#include "gdesc/equivalence.hpp"

using namespace gdesc;

TEST_CASE("descend on the identity datum recovers the carrier") {
  const GaloisDescentDatum d = action_to_descent(
      trivial_weak_action(cyclic(1), share(as_one_object_groupoid(z3()))));
  const DescendedGroupoid desc = descend(d);
  CHECK(validate_groupoid(desc.gpd).ok());
  // phi_e is forced to the identity, so objects match the carrier
  REQUIRE(desc.objects.size() == 1);
  CHECK(desc.objects[0].second == std::vector<int>{0});
  CHECK(are_equivalent(share(desc.gpd), d.g).equivalent());
}

TEST_CASE("descend of the trivial Z/2 action on B(Z/2)") {
  const GaloisDescentDatum d = action_to_descent(
      ba_strict_action(trivial_action(z2(), z2())));
  const DescendedGroupoid desc = descend(d);
  CHECK(validate_groupoid(desc.gpd).ok());
  const SkeletonResult sk = skeleton(share(desc.gpd));
  CHECK(sk.skeleton.num_objects == 2);
  for (int c = 0; c < 2; ++c)
    CHECK(desc.gpd.hom(sk.rep[c], sk.rep[c]).size() == 2);
}

TEST_CASE("descended output is a groupoid with a faithful forgetful functor") {
  const std::vector<GaloisDescentDatum> data = {
      action_to_descent(ba_strict_action(inversion_action(z2(), z3(), {0, 1}))),
      action_to_descent(ba_strict_action(trivial_action(z3(), z3()))),
      action_to_descent(
          trivial_weak_action(z2(), share(connected_rich_carrier()))),
  };
  for (const GaloisDescentDatum& d : data) {
    const DescendedGroupoid desc = descend(d);
    CHECK(validate_groupoid(desc.gpd).ok());
    CHECK(validate_functor(desc.forgetful).ok());
    // faithful: distinct parallel descended morphisms differ underneath
    for (int a = 0; a < desc.gpd.num_morphisms(); ++a)
      for (int b = a + 1; b < desc.gpd.num_morphisms(); ++b)
        if (desc.gpd.src[a] == desc.gpd.src[b] &&
            desc.gpd.tgt[a] == desc.gpd.tgt[b])
          CHECK(desc.underlying[a] != desc.underlying[b]);
  }
}

TEST_CASE("unit components are forced, not assumed") {
  // a coherent datum with non-identity unit psi still descends, and every
  // object's phi_e lands on the value the (e, e) equation dictates
  const FiniteGroup gamma = z2();
  const FiniteGroup a = z3();
  const GroupoidPtr ba = share(as_one_object_groupoid(a));
  WeakAction w;
  w.gamma = gamma;
  w.g = ba;
  w.mu = {identity_functor(ba), make_functor(ba, {0}, a.inv)};
  auto iso = [&](int t, int s, int comp) {
    NatIso n;
    n.from = compose_functors(w.mu[t], w.mu[s]);
    n.to = w.mu[gamma.op(t, s)];
    n.component = {comp};
    return n;
  };
  const int c = 1;
  w.alpha = {{iso(0, 0, c), iso(0, 1, c)},
             {iso(1, 0, a.inv[c]), iso(1, 1, a.inv[c])}};
  w.beta.from = w.mu[0];
  w.beta.to = identity_functor(ba);
  w.beta.component = {c};
  REQUIRE(validate_weak_action(w).ok());

  const GaloisDescentDatum d = action_to_descent(w);
  REQUIRE(validate_galois_datum(d).ok());
  const DescendedGroupoid desc = descend(d);
  CHECK(validate_groupoid(desc.gpd).ok());
  CHECK_FALSE(desc.objects.empty());
  for (const auto& [x, fam] : desc.objects)
    CHECK(fam[gamma.id] == a.inv[c]);  // beta^-1, not the identity
}

TEST_CASE("golden pairs for two-element groups") {
  SUBCASE("inversion on B(Z/3): all three pairs, one class, trivial Aut") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
    const auto pairs = z2_pair_objects(d);
    CHECK(pairs.size() == 3);
    const DescendedGroupoid desc = descend(d);
    std::vector<std::pair<int, int>> got;
    for (const auto& [x, fam] : desc.objects) {
      CHECK(fam[0] == d.g->identity[x]);
      got.emplace_back(x, fam[1]);
    }
    CHECK(got == pairs);
    const SkeletonResult sk = skeleton(share(desc.gpd));
    CHECK(sk.skeleton.num_objects == 1);
    CHECK(sk.skeleton.num_morphisms() == 1);
  }
  SUBCASE("trivial action on B(Z/2): both pairs survive") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(trivial_action(z2(), z2())));
    const auto pairs = z2_pair_objects(d);
    CHECK(pairs.size() == 2);
  }
  SUBCASE("non-strict units are refused") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(trivial_action(z3(), z3())));
    CHECK_THROWS(z2_pair_objects(d));
  }
}

TEST_CASE("torsor base change") {
  SUBCASE("the trivial group leaves the carrier alone") {
    const FiniteGroupoid h = as_one_object_groupoid(z3());
    const GaloisDescentDatum d = base_change_torsor(h, cyclic(1));
    CHECK(*d.g == h);
    CHECK(validate_galois_datum(d).ok());
  }
  SUBCASE("sections over the two-point cover of a point form a point") {
    const GaloisDescentDatum d =
        base_change_torsor(terminal_groupoid(), z2());
    CHECK(d.g->num_objects == 1);
    CHECK(validate_galois_datum(d).ok());
  }
  SUBCASE("coordinate shifts are strictly multiplicative, S_3 included") {
    const GaloisDescentDatum d =
        base_change_torsor(discrete_groupoid(2), s3());
    CHECK(validate_galois_datum(d).ok());
    for (int t = 0; t < 6; ++t)
      for (int s = 0; s < 6; ++s)
        CHECK(compose_functors(d.f[s], d.f[t])
                  .same_maps(d.f[s3().op(t, s)]));
  }
}

TEST_CASE("effectivity round trips") {
  SUBCASE("terminal carrier for every fixture group") {
    for (const FiniteGroup& gamma : {z2(), z3(), v4(), s3()}) {
      const RoundtripResult r = roundtrip_check(terminal_groupoid(), gamma);
      CHECK(r.equivalence.equivalent());
    }
  }
  SUBCASE("B(Z/3) under Z/2") {
    const RoundtripResult r =
        roundtrip_check(as_one_object_groupoid(z3()), z2());
    CHECK(r.equivalence.equivalent());
  }
  SUBCASE("two points under Z/2 x Z/2") {
    const RoundtripResult r = roundtrip_check(discrete_groupoid(2), v4());
    CHECK(r.equivalence.equivalent());
  }
}

TEST_CASE("descending morphisms") {
  SUBCASE("identity morphism induces the identity") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(trivial_action(z2(), z2())));
    const DescendedGroupoid desc = descend(d);
    const GroupoidFunctor f =
        descend_morphism(identity_descent_morphism(d), desc, desc);
    CHECK(f.same_maps(identity_functor(share(desc.gpd))));
  }
  SUBCASE("on trivial-group data the functor acts as F") {
    const GroupoidPtr bz3 = share(as_one_object_groupoid(z3()));
    const GaloisDescentDatum d =
        action_to_descent(trivial_weak_action(cyclic(1), bz3));
    const DescendedGroupoid desc = descend(d);
    DescentMorphism m = identity_descent_morphism(d);
    m.F = make_functor(bz3, {0}, z3().inv);  // inversion downstairs
    m.eta[0].from = compose_functors(m.F, d.f[0]);
    m.eta[0].to = compose_functors(d.f[0], m.F);
    REQUIRE(validate_descent_morphism(m).ok());
    const GroupoidFunctor f = descend_morphism(m, desc, desc);
    CHECK(validate_functor(f).ok());
    CHECK(f.mor_map == std::vector<int>{0, 2, 1});
  }
  SUBCASE("an eta twist permutes the two classes upstairs") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(trivial_action(z2(), z2())));
    const DescendedGroupoid desc = descend(d);
    REQUIRE(desc.objects.size() == 2);
    DescentMorphism m = identity_descent_morphism(d);
    m.eta[1].component = {1};  // twist over the generator
    REQUIRE(validate_descent_morphism(m).ok());
    const GroupoidFunctor f = descend_morphism(m, desc, desc);
    CHECK(validate_functor(f).ok());
    // the generator family flips: (x, phi_s = a) -> (x, phi_s = a + 1)
    CHECK(f.obj_map == std::vector<int>{1, 0});
  }
}

TEST_CASE("hom categories over the cover") {
  SUBCASE("terminal against terminal: one object, one morphism each") {
    const HomDescentReport r =
        hom_descent_check(terminal_groupoid(), terminal_groupoid(), z2());
    CHECK(r.ok());
    CHECK(r.downstairs_functors == 1);
    CHECK(r.descent_morphisms == 1);
  }
  SUBCASE("terminal against B(Z/2): both categories are B(Z/2)") {
    const HomDescentReport r = hom_descent_check(
        terminal_groupoid(), as_one_object_groupoid(z2()), z2());
    CHECK(r.ok());
    CHECK(r.downstairs_functors == 1);
    CHECK(r.descent_morphisms == 2);  // both isomorphic to the diagonal
  }
  SUBCASE("two points against two points: classes biject") {
    const HomDescentReport r =
        hom_descent_check(discrete_groupoid(2), discrete_groupoid(2), z2());
    CHECK(r.ok());
    CHECK(r.downstairs_functors == 4);
    CHECK(r.descent_morphisms == 4);
  }
  SUBCASE("an oversized input is undecided") {
    const HomDescentReport r = hom_descent_check(
        pair_groupoid(4), pair_groupoid(4), z2());
    CHECK(r.undecided);
  }
}
