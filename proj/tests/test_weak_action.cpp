#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/equivalence.hpp"
#include "gdesc/weak_action.hpp"

using namespace gdesc;

namespace {

// A genuinely weak Z/2 action on B(Z/3) with a nontrivial unit iso:
// mu(e) = id, mu(s) = inversion, beta component c, alpha components
// (e,e) -> c, (e,s) -> c, (s,e) -> -c, (s,s) -> -c.
WeakAction weak_unit_action(int c) {
  const FiniteGroup gamma = z2();
  const FiniteGroup a = z3();
  const GroupoidPtr ba = share(as_one_object_groupoid(a));
  WeakAction w;
  w.gamma = gamma;
  w.g = ba;
  w.mu = {identity_functor(ba), make_functor(ba, {0}, a.inv)};
  const int minus_c = a.inv[c];
  auto iso = [&](int t, int s, int comp) {
    NatIso n;
    n.from = compose_functors(w.mu[t], w.mu[s]);
    n.to = w.mu[gamma.op(t, s)];
    n.component = {comp};
    return n;
  };
  w.alpha = {{iso(0, 0, c), iso(0, 1, c)},
             {iso(1, 0, minus_c), iso(1, 1, minus_c)}};
  w.beta.from = w.mu[0];
  w.beta.to = identity_functor(ba);
  w.beta.component = {c};
  return w;
}

}  // namespace

TEST_CASE("strict actions validate") {
  SUBCASE("trivial group acts as the identity") {
    const WeakAction w =
        trivial_weak_action(cyclic(1), share(as_one_object_groupoid(z3())));
    CHECK(validate_weak_action(w).ok());
  }
  SUBCASE("inversion of Z/3 under Z/2, all eight triples") {
    const WeakAction w = ba_strict_action(inversion_action(z2(), z3(), {0, 1}));
    CHECK(validate_weak_action(w).ok());
  }
  SUBCASE("cyclic rotation of three points under Z/3") {
    const GroupoidPtr d3 = share(discrete_groupoid(3));
    std::vector<GroupoidFunctor> h;
    for (int s = 0; s < 3; ++s) {
      std::vector<int> m(3);
      for (int i = 0; i < 3; ++i) m[i] = (i + s) % 3;
      h.push_back(make_functor(d3, m, m));
    }
    CHECK(validate_weak_action(strict_action(z3(), d3, h)).ok());
  }
  SUBCASE("non-multiplicative input is refused") {
    const GroupoidPtr d2 = share(discrete_groupoid(2));
    const GroupoidFunctor sw = make_functor(d2, {1, 0}, {1, 0});
    CHECK_THROWS(strict_action(z2(), d2, {sw, sw}));
  }
}

TEST_CASE("a perturbed alpha breaks a unit or associativity law") {
  WeakAction w = ba_strict_action(inversion_action(z2(), z3(), {0, 1}));
  w.alpha[1][1].component = {1};
  const Report r = validate_weak_action(w);
  CHECK_FALSE(r.ok());
  CHECK(r.law == "associativity");
}

TEST_CASE("nontrivial unit iso can still be coherent") {
  for (int c : {1, 2}) {
    const WeakAction w = weak_unit_action(c);
    CHECK(validate_weak_action(w).ok());
  }
  // breaking the unit law is detected
  WeakAction w = weak_unit_action(1);
  w.alpha[1][0].component = {1};
  const Report r = validate_weak_action(w);
  CHECK_FALSE(r.ok());
  CHECK(r.law == "unit-left");
}

TEST_CASE("twist_by_cochain") {
  const WeakAction base = ba_strict_action(trivial_action(z2(), z3()));
  const int n = 2;

  SUBCASE("identity cochain leaves the action unchanged") {
    std::vector<std::vector<std::vector<int>>> c(
        n, std::vector<std::vector<int>>(n, {0}));
    const auto out = twist_by_cochain(base, c);
    REQUIRE(out.has_value());
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        CHECK(out->alpha[t][s].component == base.alpha[t][s].component);
  }
  SUBCASE("a central square twist is coherent and non-strict") {
    std::vector<std::vector<std::vector<int>>> c(
        n, std::vector<std::vector<int>>(n, {0}));
    c[1][1] = {1};
    const auto out = twist_by_cochain(base, c);
    REQUIRE(out.has_value());
    CHECK(validate_weak_action(*out).ok());
    CHECK(out->alpha[1][1].component == std::vector<int>{1});
  }
  SUBCASE("a unit-breaking cochain is rejected") {
    std::vector<std::vector<std::vector<int>>> c(
        n, std::vector<std::vector<int>>(n, {0}));
    c[1][0] = {1};
    CHECK(twist_by_cochain(base, c) == std::nullopt);
  }
  SUBCASE("coboundary twists always land on valid actions") {
    std::mt19937_64 rng(11);
    int nonstrict = 0;
    for (int trial = 0; trial < 50; ++trial) {
      for (const GroupAction& theta :
           {trivial_action(v4(), z3()),
            inversion_action(z2(), z4(), {0, 1}),
            trivial_action(s3(), z2())}) {
        std::vector<int> b(theta.gamma.order, theta.a.id);
        for (int s = 0; s < theta.gamma.order; ++s)
          if (s != theta.gamma.id)
            b[s] = static_cast<int>(rng() % theta.a.order);
        const auto out = coboundary_twist(theta, b);
        REQUIRE(out.has_value());
        CHECK(validate_weak_action(*out).ok());
        for (int t = 0; t < theta.gamma.order; ++t)
          for (int s = 0; s < theta.gamma.order; ++s)
            if (out->alpha[t][s].component[0] != theta.a.id) ++nonstrict;
      }
    }
    CHECK(nonstrict > 0);
  }
}

TEST_CASE("validation is invariant under relabeling") {
  std::mt19937_64 rng(23);
  const std::vector<WeakAction> fixtures = {
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})),
      weak_unit_action(1),
      trivial_weak_action(z2(), share(connected_rich_carrier()))};
  for (const WeakAction& w : fixtures) {
    REQUIRE(validate_weak_action(w).ok());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> op(w.g->num_objects), mp(w.g->num_morphisms());
      std::iota(op.begin(), op.end(), 0);
      std::iota(mp.begin(), mp.end(), 0);
      std::shuffle(op.begin(), op.end(), rng);
      std::shuffle(mp.begin(), mp.end(), rng);
      CHECK(validate_weak_action(relabel_weak_action(w, op, mp)).ok());
    }
  }
}

TEST_CASE("every mu of a valid action is an equivalence") {
  const std::vector<WeakAction> fixtures = {
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})),
      weak_unit_action(2),
      trivial_weak_action(z3(), share(pair_groupoid(3)))};
  for (const WeakAction& w : fixtures)
    for (const GroupoidFunctor& mu : w.mu)
      CHECK(functor_equivalence_witness(mu).has_value());
}

TEST_CASE("the generated catalog is valid, sized, and mixed") {
  const auto catalog = weak_action_catalog(99, 100);
  CHECK(catalog.size() >= 100);
  int strict = 0, twisted = 0;
  for (const NamedAction& na : catalog) {
    CHECK(na.action.g->num_objects <= 6);
    CHECK(na.action.g->num_morphisms() <= 24);
    CHECK(validate_weak_action(na.action).ok());
    (na.strict ? strict : twisted)++;
  }
  CHECK(strict >= 30);
  CHECK(twisted >= 50);
}
