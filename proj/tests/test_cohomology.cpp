#include <algorithm>

#include "doctest.h"
#include "gdesc/catalog.hpp"
#include "gdesc/cohomology.hpp"

using namespace gdesc;

namespace {

std::vector<int> sorted_stab_orders(const CocycleSet& cs) {
  std::vector<int> out;
  for (const auto& st : cs.stabilizers)
    out.push_back(static_cast<int>(st.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the unit value of every cocycle is forced") {
  for (const auto& [name, action] : cohomology_fixtures()) {
    const CocycleSet cs = h1(action);
    for (const auto& z : cs.cocycles) CHECK(z[action.gamma.id] == action.a.id);
  }
}

TEST_CASE("trivial group: one class, full stabilizer") {
  const CocycleSet cs = h1(trivial_action(cyclic(1), s3()));
  CHECK(cs.cocycles.size() == 1);
  CHECK(cs.classes.size() == 1);
  CHECK(cs.stabilizers[0].size() == 6);
}

TEST_CASE("Z/2 with inverted Z/3 coefficients: three cocycles, one class") {
  const CocycleSet cs = h1(inversion_action(z2(), z3(), {0, 1}));
  CHECK(cs.cocycles.size() == 3);
  CHECK(cs.classes.size() == 1);
  CHECK(cs.stabilizers[0].size() == 1);
}

TEST_CASE("Z/2 with trivial Z/2 coefficients: two rigid classes") {
  const CocycleSet cs = h1(trivial_action(z2(), z2()));
  CHECK(cs.cocycles.size() == 2);
  CHECK(cs.classes.size() == 2);
  CHECK(sorted_stab_orders(cs) == std::vector<int>{2, 2});
}

TEST_CASE("Z/3 with trivial Z/3 coefficients: three classes of order three") {
  const CocycleSet cs = h1(trivial_action(z3(), z3()));
  CHECK(cs.cocycles.size() == 3);
  CHECK(cs.classes.size() == 3);
  CHECK(sorted_stab_orders(cs) == std::vector<int>{3, 3, 3});
}

TEST_CASE("Z/2 with trivial S_3 coefficients: unit and involutions") {
  const CocycleSet cs = h1(trivial_action(z2(), s3()));
  // cocycles are the solutions of z * z = e
  CHECK(cs.cocycles.size() == 4);
  CHECK(cs.classes.size() == 2);
  CHECK(sorted_stab_orders(cs) == std::vector<int>{2, 6});
  // the involution class has all three transpositions
  for (std::size_t c = 0; c < cs.classes.size(); ++c)
    if (cs.stabilizers[c].size() == 2) CHECK(cs.classes[c].size() == 3);
}

TEST_CASE("size caps produce an explicit error") {
  CHECK_THROWS(h1(trivial_action(symmetric(4), symmetric(4))));
}

TEST_CASE("descend agrees with the oracle on every fixture") {
  for (const auto& [name, action] : cohomology_fixtures()) {
    const CohomologyComparison cmp = compare_with_descent(action);
    INFO(name, ": ", cmp.detail);
    CHECK(cmp.ok);
  }
}

TEST_CASE("pinned comparison shapes") {
  {
    const CohomologyComparison c =
        compare_with_descent(inversion_action(z2(), z3(), {0, 1}));
    CHECK(c.ok);
    CHECK(c.descended_classes == 1);
    CHECK(c.descended_automorphism_orders == std::vector<int>{1});
  }
  {
    const CohomologyComparison c =
        compare_with_descent(trivial_action(z2(), z2()));
    CHECK(c.ok);
    CHECK(c.descended_classes == 2);
    CHECK(c.descended_automorphism_orders == std::vector<int>{2, 2});
  }
  {
    const CohomologyComparison c =
        compare_with_descent(trivial_action(z3(), z3()));
    CHECK(c.ok);
    CHECK(c.descended_classes == 3);
    CHECK(c.descended_automorphism_orders == std::vector<int>{3, 3, 3});
  }
  {
    const CohomologyComparison c =
        compare_with_descent(trivial_action(z2(), s3()));
    CHECK(c.ok);
    CHECK(c.descended_classes == 2);
    CHECK(c.descended_automorphism_orders == std::vector<int>{2, 6});
  }
}
