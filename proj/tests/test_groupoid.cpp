#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/equivalence.hpp"
#include "gdesc/functor.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"

using namespace gdesc;

namespace {

GroupoidFunctor inversion_functor(const GroupoidPtr& ba,
                                  const FiniteGroup& a) {
  return make_functor(ba, {0}, a.inv);
}

std::vector<FiniteGroupoid> test_groupoids() {
  std::vector<FiniteGroupoid> out;
  out.push_back(terminal_groupoid());
  out.push_back(discrete_groupoid(3));
  out.push_back(pair_groupoid(2));
  out.push_back(as_one_object_groupoid(z3()));
  out.push_back(as_one_object_groupoid(v4()));
  out.push_back(connected_rich_carrier());
  {
    const FiniteGroupoid bz2 = as_one_object_groupoid(z2());
    const FiniteGroupoid pt = terminal_groupoid();
    out.push_back(disjoint_union({&bz2, &pt}).gpd);
  }
  return out;
}

}  // namespace

TEST_CASE("groupoid axioms on the standard carriers") {
  CHECK(validate_groupoid(terminal_groupoid()).ok());
  CHECK(validate_groupoid(as_one_object_groupoid(z3())).ok());
  CHECK(validate_groupoid(pair_groupoid(3)).ok());
  CHECK(validate_groupoid(discrete_groupoid(4)).ok());
  CHECK(validate_groupoid(connected_rich_carrier()).ok());
  CHECK(validate_groupoid(power_groupoid(pair_groupoid(2), 3)).ok());
}

TEST_CASE("a corrupted composition entry fails an axiom") {
  FiniteGroupoid g = as_one_object_groupoid(z3());
  g.set_comp(1, 1, 1);  // 1+1 must be 2
  const Report r = validate_groupoid(g);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.structural());
  CHECK((r.law == "associativity" || r.law == "inverse" ||
         r.law == "identity"));
}

TEST_CASE("malformed indices are a structural error, not an axiom failure") {
  FiniteGroupoid g = as_one_object_groupoid(z2());
  g.src[1] = 7;
  const Report r = validate_groupoid(g);
  CHECK(r.structural());
}

TEST_CASE("functor composition") {
  const GroupoidPtr bz3 = share(as_one_object_groupoid(z3()));
  const GroupoidFunctor inv = inversion_functor(bz3, z3());
  CHECK(validate_functor(inv).ok());

  SUBCASE("identity is neutral") {
    const GroupoidFunctor idf = identity_functor(bz3);
    CHECK(compose_functors(idf, inv).same_maps(inv));
    CHECK(compose_functors(inv, idf).same_maps(inv));
  }
  SUBCASE("inversion squares to the identity on all three morphisms") {
    CHECK(compose_functors(inv, inv).same_maps(identity_functor(bz3)));
  }
  SUBCASE("shifts on a discrete carrier compose additively") {
    const GroupoidPtr d3 = share(discrete_groupoid(3));
    auto shift = [&](int k) {
      std::vector<int> m(3);
      for (int i = 0; i < 3; ++i) m[i] = (i + k) % 3;
      return make_functor(d3, m, m);
    };
    CHECK(compose_functors(shift(1), shift(2)).same_maps(shift(0)));
  }
  SUBCASE("endpoint mismatch throws") {
    const GroupoidPtr d3 = share(discrete_groupoid(3));
    CHECK_THROWS(compose_functors(inv, identity_functor(d3)));
  }
}

TEST_CASE("vertical composition and whiskering") {
  const GroupoidPtr bz3 = share(as_one_object_groupoid(z3()));
  const GroupoidFunctor idf = identity_functor(bz3);
  const GroupoidFunctor inv = inversion_functor(bz3, z3());

  NatIso a;  // id => id with component 1
  a.from = idf;
  a.to = idf;
  a.component = {1};
  REQUIRE(validate_nat_iso(a).ok());

  SUBCASE("inverse law") {
    const NatIso round = vcompose(inverse_nat_iso(a), a);
    CHECK(round.component == identity_nat_iso(idf).component);
  }
  SUBCASE("unit whiskering") {
    CHECK(nat_iso_equal(left_whisker(idf, a), a));
  }
  SUBCASE("whiskering by the inversion functor inverts the component") {
    CHECK(left_whisker(inv, a).component == std::vector<int>{2});
  }
  SUBCASE("whisker interchange") {
    NatIso b;
    b.from = idf;
    b.to = idf;
    b.component = {2};
    const NatIso lhs = right_whisker(vcompose(b, a), inv);
    const NatIso rhs = vcompose(right_whisker(b, inv), right_whisker(a, inv));
    CHECK(lhs.component == rhs.component);
    const NatIso lhs2 = left_whisker(inv, vcompose(b, a));
    const NatIso rhs2 = vcompose(left_whisker(inv, b), left_whisker(inv, a));
    CHECK(lhs2.component == rhs2.component);
  }
}

TEST_CASE("naturality failures are caught") {
  // component constant on the two objects of the rich carrier cannot be
  // natural unless central and matching along the connecting morphisms
  const GroupoidPtr k = share(connected_rich_carrier());
  const GroupoidFunctor idf = identity_functor(k);
  NatIso a;
  a.from = idf;
  a.to = idf;
  a.component = {k->identity[0], k->identity[1]};
  CHECK(validate_nat_iso(a).ok());
  a.component[0] = k->hom(0, 0)[1];
  CHECK_FALSE(validate_nat_iso(a).ok());
}

TEST_CASE("disjoint union is a coproduct") {
  const FiniteGroupoid pt = terminal_groupoid();
  const FiniteGroupoid bz3 = as_one_object_groupoid(z3());

  SUBCASE("union of one part is the part itself") {
    const DisjointUnion u = disjoint_union({&bz3});
    CHECK(u.gpd == bz3);
  }
  SUBCASE("k copies of the terminal groupoid form a discrete one") {
    const DisjointUnion u = disjoint_union({&pt, &pt, &pt});
    CHECK(u.gpd == discrete_groupoid(3));
  }
  SUBCASE("component count adds up") {
    const DisjointUnion u = disjoint_union({&bz3, &pt, &bz3});
    const std::vector<int> cls = iso_classes(u.gpd);
    CHECK(*std::max_element(cls.begin(), cls.end()) + 1 == 3);
    CHECK(validate_groupoid(u.gpd).ok());
  }
}

TEST_CASE("skeletons") {
  SUBCASE("a discrete groupoid is its own skeleton") {
    const SkeletonResult r = skeleton(share(discrete_groupoid(3)));
    CHECK(r.skeleton == discrete_groupoid(3));
  }
  SUBCASE("a contractible component collapses to a point") {
    const SkeletonResult r = skeleton(share(pair_groupoid(2)));
    CHECK(r.skeleton.num_objects == 1);
    CHECK(r.skeleton.num_morphisms() == 1);
  }
  SUBCASE("the swap action groupoid on two points is contractible") {
    const FiniteGroupoid g =
        action_groupoid(z2(), {{0, 1}, {1, 0}}, 2);
    REQUIRE(validate_groupoid(g).ok());
    const SkeletonResult r = skeleton(share(g));
    CHECK(r.skeleton.num_objects == 1);
    CHECK(r.skeleton.num_morphisms() == 1);
  }
  SUBCASE("skeleton validates and inclusion/retraction are functors") {
    for (const FiniteGroupoid& g : test_groupoids()) {
      const SkeletonResult r = skeleton(share(g));
      CHECK(validate_groupoid(r.skeleton).ok());
      CHECK(validate_functor(r.inclusion).ok());
      CHECK(validate_functor(r.retraction).ok());
      CHECK(functor_equivalence_witness(r.inclusion).has_value());
    }
  }
}

TEST_CASE("equivalence decisions") {
  SUBCASE("every carrier is equivalent to its skeleton") {
    for (const FiniteGroupoid& g : test_groupoids()) {
      const GroupoidPtr gp = share(g);
      const SkeletonResult r = skeleton(gp);
      CHECK(are_equivalent(gp, share(r.skeleton)).equivalent());
    }
  }
  SUBCASE("automorphism counts separate B(Z/2) from two points") {
    const EquivResult r = are_equivalent(share(as_one_object_groupoid(z2())),
                                         share(discrete_groupoid(2)));
    CHECK(r.outcome == EquivResult::Outcome::Inequivalent);
  }
  SUBCASE("group structure separates B(Z/4) from B(Z/2 x Z/2)") {
    const EquivResult r = are_equivalent(share(as_one_object_groupoid(z4())),
                                         share(as_one_object_groupoid(v4())));
    CHECK(r.outcome == EquivResult::Outcome::Inequivalent);
  }
  SUBCASE("symmetric and reflexive on the catalog") {
    const auto gs = test_groupoids();
    for (const FiniteGroupoid& a : gs) {
      CHECK(are_equivalent(share(a), share(a)).equivalent());
      for (const FiniteGroupoid& b : gs) {
        const EquivResult ab = are_equivalent(share(a), share(b));
        const EquivResult ba = are_equivalent(share(b), share(a));
        CHECK(ab.outcome == ba.outcome);
      }
    }
  }
  SUBCASE("budget overruns report undecided, never a silent answer") {
    const EquivResult r = are_equivalent(share(as_one_object_groupoid(z3())),
                                         share(as_one_object_groupoid(z3())),
                                         1);
    CHECK(r.undecided());
  }
  SUBCASE("witnesses are honest: forward functor checks out") {
    const FiniteGroupoid g = connected_rich_carrier();
    const EquivResult r = are_equivalent(
        share(g), share(skeleton(share(g)).skeleton));
    REQUIRE(r.equivalent());
    CHECK(validate_functor(r.witness->forward).ok());
    CHECK(r.witness->full);
    CHECK(r.witness->faithful);
  }
}

TEST_CASE("relabeling keeps validity") {
  std::mt19937_64 rng(7);
  const FiniteGroupoid g = connected_rich_carrier();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> op(g.num_objects), mp(g.num_morphisms());
    std::iota(op.begin(), op.end(), 0);
    std::iota(mp.begin(), mp.end(), 0);
    std::shuffle(op.begin(), op.end(), rng);
    std::shuffle(mp.begin(), mp.end(), rng);
    const FiniteGroupoid h = relabel_groupoid(g, op, mp);
    CHECK(validate_groupoid(h).ok());
    CHECK(are_equivalent(share(g), share(h)).equivalent());
  }
}

TEST_CASE("products multiply everything") {
  const FiniteGroupoid p = product_groupoid(pair_groupoid(2),
                                            as_one_object_groupoid(z3()));
  CHECK(p.num_objects == 2);
  CHECK(p.num_morphisms() == 12);
  CHECK(validate_groupoid(p).ok());
  const FiniteGroupoid q = power_groupoid(as_one_object_groupoid(z2()), 3);
  CHECK(q.num_objects == 1);
  CHECK(q.num_morphisms() == 8);
  CHECK(validate_groupoid(q).ok());
}
