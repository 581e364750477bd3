#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/weak_action.hpp"

using namespace gdesc;

namespace {

bool datum_equal(const GaloisDescentDatum& a, const GaloisDescentDatum& b) {
  if (a.gamma.mul != b.gamma.mul || !(*a.g == *b.g)) return false;
  for (int s = 0; s < a.gamma.order; ++s)
    if (!a.f[s].same_maps(b.f[s])) return false;
  for (int t = 0; t < a.gamma.order; ++t)
    for (int s = 0; s < a.gamma.order; ++s)
      if (a.psi[t][s].component != b.psi[t][s].component) return false;
  return true;
}

WeakAction weak_unit_action(int c) {
  const FiniteGroup gamma = z2();
  const FiniteGroup a = z3();
  const GroupoidPtr ba = share(as_one_object_groupoid(a));
  WeakAction w;
  w.gamma = gamma;
  w.g = ba;
  w.mu = {identity_functor(ba), make_functor(ba, {0}, a.inv)};
  const int mc = a.inv[c];
  auto iso = [&](int t, int s, int comp) {
    NatIso n;
    n.from = compose_functors(w.mu[t], w.mu[s]);
    n.to = w.mu[gamma.op(t, s)];
    n.component = {comp};
    return n;
  };
  w.alpha = {{iso(0, 0, c), iso(0, 1, c)}, {iso(1, 0, mc), iso(1, 1, mc)}};
  w.beta.from = w.mu[0];
  w.beta.to = identity_functor(ba);
  w.beta.component = {c};
  return w;
}

}  // namespace

TEST_CASE("galois data validate") {
  SUBCASE("trivial group, identity structure") {
    const GaloisDescentDatum d = action_to_descent(
        trivial_weak_action(cyclic(1), share(as_one_object_groupoid(z3()))));
    CHECK(validate_galois_datum(d).ok());
    CHECK(d.f[0].same_maps(identity_functor(d.g)));
  }
  SUBCASE("inversion with identity psi, all eight squares") {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
    CHECK(validate_galois_datum(d).ok());
    CHECK(d.f[1].mor_map == z3().inv);
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 2; ++s)
        CHECK(d.psi[t][s].component == std::vector<int>{0});
  }
  SUBCASE("a perturbed psi component reports the violating triple") {
    GaloisDescentDatum d = action_to_descent(
        ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
    d = perturb_psi(d, 1, 1, 0, 1);
    const Report r = validate_galois_datum(d);
    CHECK_FALSE(r.ok());
    CHECK(r.law == "cocycle");
    CHECK_FALSE(r.where.empty());
  }
}

TEST_CASE("the induced datum of a weak action validates") {
  // strict, genuinely weak, and twisted instances
  CHECK(validate_galois_datum(action_to_descent(weak_unit_action(1))).ok());
  CHECK(validate_galois_datum(action_to_descent(weak_unit_action(2))).ok());
  const auto tw = coboundary_twist(trivial_action(v4(), z3()),
                                   {0, 1, 2, 1});
  REQUIRE(tw.has_value());
  CHECK(validate_galois_datum(action_to_descent(*tw)).ok());
}

TEST_CASE("encoding conversion is the identity on tables") {
  const GaloisDescentDatum d = action_to_descent(
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
  const CoverDescentDatum c = galois_to_cover(d);
  CHECK(static_cast<int>(c.phi.size()) == d.gamma.order);
  for (int s = 0; s < d.gamma.order; ++s)
    CHECK(c.phi[s].same_maps(d.f[s]));
  CHECK(datum_equal(cover_to_galois(c), d));
}

TEST_CASE("validity transfers along the conversion, both ways") {
  const GaloisDescentDatum good = action_to_descent(
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
  CHECK(validate_cover_datum(galois_to_cover(good)).ok());

  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s) {
      const GaloisDescentDatum bad = perturb_psi(good, t, s, 0, 1);
      CHECK_FALSE(validate_galois_datum(bad).ok());
      const CoverDescentDatum bad_cover = galois_to_cover(bad);
      const Report r = validate_cover_datum(bad_cover);
      CHECK_FALSE(r.ok());
      CHECK(datum_equal(cover_to_galois(bad_cover), bad));
    }

  // an S_3 instance exercises the full quadruple-overlap assembly
  const GaloisDescentDatum big = action_to_descent(
      ba_strict_action(trivial_action(s3(), z3())));
  CHECK(validate_galois_datum(big).ok());
  CHECK(validate_cover_datum(galois_to_cover(big)).ok());
}

TEST_CASE("descent morphisms") {
  const GaloisDescentDatum d = action_to_descent(
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})));

  SUBCASE("the identity morphism validates") {
    CHECK(validate_descent_morphism(identity_descent_morphism(d)).ok());
  }
  SUBCASE("F = mu(e) with eta built from the unit iso") {
    const WeakAction w = weak_unit_action(1);
    const GaloisDescentDatum dw = action_to_descent(w);
    DescentMorphism m;
    m.source = dw;
    m.target = dw;
    m.F = w.mu[w.gamma.id];
    m.eta.resize(2);
    const FiniteGroupoid& g = *w.g;
    for (int s = 0; s < 2; ++s) {
      const int sinv = w.gamma.inv[s];
      NatIso e;
      e.from = compose_functors(m.F, dw.f[s]);
      e.to = compose_functors(dw.f[s], m.F);
      e.component.resize(g.num_objects);
      for (int x = 0; x < g.num_objects; ++x)
        e.component[x] =
            g.compose(g.inverse[w.alpha[sinv][w.gamma.id].at(x)],
                      w.alpha[w.gamma.id][sinv].at(x));
      m.eta[s] = std::move(e);
    }
    CHECK(validate_descent_morphism(m).ok());
  }
  SUBCASE("a perturbed eta is rejected") {
    const GaloisDescentDatum rich = action_to_descent(
        trivial_weak_action(z2(), share(connected_rich_carrier())));
    DescentMorphism m = identity_descent_morphism(rich);
    CHECK(validate_descent_morphism(m).ok());
    CHECK_FALSE(validate_descent_morphism(perturb_eta(m, 1, 0, 1)).ok());
  }
  SUBCASE("valid morphisms compose") {
    const WeakAction w = weak_unit_action(2);
    const GaloisDescentDatum dw = action_to_descent(w);
    DescentMorphism twist;
    twist.source = dw;
    twist.target = dw;
    twist.F = identity_functor(dw.g);
    for (int s = 0; s < 2; ++s) {
      NatIso e;
      e.from = compose_functors(twist.F, dw.f[s]);
      e.to = compose_functors(dw.f[s], twist.F);
      // eta_e = 0 is forced by the pair (e, e); eta_s may twist
      e.component = {s == 0 ? 0 : 1};
      twist.eta.push_back(std::move(e));
    }
    if (validate_descent_morphism(twist).ok()) {
      const DescentMorphism square =
          compose_descent_morphisms(twist, twist);
      CHECK(validate_descent_morphism(square).ok());
    }
    const DescentMorphism idm = identity_descent_morphism(dw);
    CHECK(validate_descent_morphism(
              compose_descent_morphisms(idm, idm))
              .ok());
  }
}
