#pragma once

#include <optional>
#include <vector>

#include "gdesc/groupoid.hpp"
#include "gdesc/report.hpp"

namespace gdesc {

/// A finite group as a multiplication table; op(a, b) = a * b.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;  // dense order x order, row major
  int id = 0;
  std::vector<int> inv;

  int op(int a, int b) const { return mul[a * order + b]; }

  bool operator==(const FiniteGroup& other) const {
    return order == other.order && mul == other.mul && id == other.id &&
           inv == other.inv;
  }
};

Report validate_group(const FiniteGroup& g);

/// Builds identity/inverse tables from a bare multiplication table.
/// Throws if no two-sided identity or some inverse is missing.
FiniteGroup group_from_table(int order, std::vector<int> mul);

FiniteGroup cyclic(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Symmetric group on n letters, n <= 4; elements are permutations in
/// lexicographic one-line order, (a*b)(x) = a(b(x)).
FiniteGroup symmetric(int n);

int element_order(const FiniteGroup& g, int a);
std::vector<int> center(const FiniteGroup& g);

/// Brute-force isomorphism search with element-order pruning.
std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b);

/// An action of gamma on a by automorphisms: aut[s][x] = theta_s(x),
/// theta a homomorphism gamma -> Aut(a).
struct GroupAction {
  FiniteGroup gamma;
  FiniteGroup a;
  std::vector<std::vector<int>> aut;

  int act(int s, int x) const { return aut[s][x]; }
};

Report validate_action(const GroupAction& act);

GroupAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& a);
/// Acts through a homomorphism gamma -> Z/2 (given by its kernel indicator);
/// the nontrivial class inverts. Requires a abelian.
GroupAction inversion_action(const FiniteGroup& gamma, const FiniteGroup& a,
                             const std::vector<int>& to_z2);

/// B(a): one object, morphisms the group elements, composition the
/// multiplication table.
FiniteGroupoid as_one_object_groupoid(const FiniteGroup& a);

/// The action groupoid of a permutation action of g on {0..n-1}:
/// objects the points, morphisms the pairs (s, x): x -> s(x).
FiniteGroupoid action_groupoid(const FiniteGroup& g,
                               const std::vector<std::vector<int>>& perm,
                               int n);

}  // namespace gdesc
