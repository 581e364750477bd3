#pragma once

#include <optional>
#include <vector>

#include "gdesc/functor.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"

namespace gdesc {

/// Witness that a functor is an equivalence: for each target object a chosen
/// source object with a connecting isomorphism, plus confirmation that the
/// functor is full and faithful (checked on every hom set).
struct EquivalenceWitness {
  GroupoidFunctor forward;
  std::vector<std::pair<int, int>> essential;  // per target object: (source object, iso forward(src) -> object)
  bool full = false;
  bool faithful = false;

  bool ok() const { return full && faithful; }
};

/// Direct full/faithful/essentially-surjective check of a functor; returns
/// the witness when all three hold.
std::optional<EquivalenceWitness> functor_equivalence_witness(
    const GroupoidFunctor& f);

struct SkeletonResult {
  FiniteGroupoid skeleton;
  std::vector<int> class_of;   // per object of g
  std::vector<int> rep;        // per class: representative object of g
  std::vector<int> connect;    // per object of g: morphism x -> rep[class]
  GroupoidFunctor inclusion;   // skeleton -> g (needs shared carriers)
  GroupoidFunctor retraction;  // g -> skeleton
};

/// One object per isomorphism class (least member), automorphism groups
/// preserved; the inclusion is an equivalence.
SkeletonResult skeleton(const GroupoidPtr& g);

struct EquivResult {
  enum class Outcome { Equivalent, Inequivalent, Undecided };
  Outcome outcome = Outcome::Undecided;
  std::optional<EquivalenceWitness> witness;

  bool equivalent() const { return outcome == Outcome::Equivalent; }
  bool undecided() const { return outcome == Outcome::Undecided; }
};

/// Decides equivalence via skeletons: a bijection of iso classes plus an
/// isomorphism of automorphism groups per matched class, searched
/// exhaustively. The budget caps the skeleton morphism count (sum of
/// automorphism group orders); beyond it the outcome is Undecided, never a
/// silent false.
EquivResult are_equivalent(const GroupoidPtr& g, const GroupoidPtr& h,
                           int budget = 64);

/// Vertex group of x as a FiniteGroup together with the morphism indices
/// realizing its elements.
std::pair<FiniteGroup, std::vector<int>> automorphism_group(
    const FiniteGroupoid& g, int x);

/// Relabels objects and morphisms by the given permutations
/// (new index = perm[old index]).
FiniteGroupoid relabel_groupoid(const FiniteGroupoid& g,
                                const std::vector<int>& obj_perm,
                                const std::vector<int>& mor_perm);

}  // namespace gdesc
