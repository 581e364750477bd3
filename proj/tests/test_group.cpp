#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/group.hpp"

using namespace gdesc;

TEST_CASE("fixture groups are groups") {
  for (const FiniteGroup& g : {z2(), z3(), z4(), v4(), s3(), symmetric(4)})
    CHECK(validate_group(g).ok());
  CHECK(cyclic(1).order == 1);
  CHECK_THROWS(cyclic(0));
  CHECK_THROWS(symmetric(5));
}

TEST_CASE("Z/2 x Z/2 is elementwise self-inverse") {
  const FiniteGroup g = v4();
  CHECK(g.order == 4);
  for (int a = 0; a < 4; ++a) CHECK(g.inv[a] == a);
}

TEST_CASE("S_3 has six elements and a trivial center") {
  const FiniteGroup g = s3();
  CHECK(g.order == 6);
  CHECK(center(g).size() == 1);
  CHECK(center(g)[0] == g.id);
  int involutions = 0;
  for (int a = 0; a < g.order; ++a)
    if (element_order(g, a) == 2) ++involutions;
  CHECK(involutions == 3);
}

TEST_CASE("one-object carriers validate") {
  for (const FiniteGroup& g : {cyclic(1), z3(), s3()}) {
    const FiniteGroupoid b = as_one_object_groupoid(g);
    CHECK(validate_groupoid(b).ok());
    CHECK(b.num_objects == 1);
    CHECK(b.num_morphisms() == g.order);
  }
  CHECK(as_one_object_groupoid(cyclic(1)) == terminal_groupoid());
}

TEST_CASE("group isomorphism search") {
  CHECK(group_isomorphism(z4(), v4()) == std::nullopt);
  CHECK(group_isomorphism(cyclic(6), direct_product(z2(), z3()))
            .has_value());
  CHECK(group_isomorphism(s3(), cyclic(6)) == std::nullopt);
  const auto iso = group_isomorphism(s3(), s3());
  REQUIRE(iso.has_value());
  const FiniteGroup g = s3();
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      CHECK((*iso)[g.op(a, b)] == g.op((*iso)[a], (*iso)[b]));
}

TEST_CASE("group actions compose multiplicatively") {
  CHECK(validate_action(trivial_action(s3(), z3())).ok());
  CHECK(validate_action(inversion_action(z2(), z4(), {0, 1})).ok());
  CHECK(validate_action(inversion_action(v4(), z3(), {0, 1, 1, 0})).ok());

  // exhaustive pairwise check is part of the validator; a broken table fails
  GroupAction bad = trivial_action(z2(), z3());
  bad.aut[1] = {0, 2, 1};  // inversion, but then aut is fine...
  CHECK(validate_action(bad).ok());
  bad.aut[1] = {1, 0, 2};  // not a homomorphism
  CHECK_FALSE(validate_action(bad).ok());
}

TEST_CASE("action groupoids") {
  const FiniteGroupoid orbit2 = action_groupoid(z2(), {{0, 1}, {1, 0}}, 2);
  CHECK(validate_groupoid(orbit2).ok());
  const FiniteGroupoid fixed = action_groupoid(z2(), {{0, 1}, {0, 1}}, 2);
  CHECK(validate_groupoid(fixed).ok());
  CHECK(fixed.hom(0, 0).size() == 2);  // stabilizer Z/2 at a fixed point
}
