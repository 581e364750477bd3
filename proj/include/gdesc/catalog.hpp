#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdesc/descent.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"
#include "gdesc/weak_action.hpp"

namespace gdesc {

// Fixture groups.
FiniteGroup z2();
FiniteGroup z3();
FiniteGroup z4();
FiniteGroup v4();
FiniteGroup s3();

GroupoidFunctor make_functor(const GroupoidPtr& g, std::vector<int> obj_map,
                             std::vector<int> mor_map);

/// Strict action of theta.gamma on the one-object carrier of theta.a.
WeakAction ba_strict_action(const GroupAction& theta);
WeakAction trivial_weak_action(const FiniteGroup& gamma, const GroupoidPtr& g);

/// Twists the strict B(a) action of theta by the coboundary of b (b[e] must
/// be the identity of a, a abelian); the result always validates and is
/// non-strict exactly when the coboundary is nonzero somewhere.
std::optional<WeakAction> coboundary_twist(const GroupAction& theta,
                                           const std::vector<int>& b);

struct NamedAction {
  std::string name;
  WeakAction action;
  bool strict = true;
};

/// The generated instance pool: every strict seed (one-object, permutation
/// and component-swap actions over Z/2, Z/3, Z/2xZ/2 and S_3), coboundary
/// twists of the abelian one-object seeds, and rejection-sampled random
/// twists. Carriers stay within 6 objects / 24 morphisms. Deterministic for
/// a fixed seed.
std::vector<NamedAction> weak_action_catalog(unsigned seed,
                                             std::size_t min_count = 100);

/// Groupoids for the effectivity round trip: at most 4 objects each.
std::vector<std::pair<std::string, FiniteGroupoid>> roundtrip_catalog();
std::vector<std::pair<std::string, FiniteGroup>> roundtrip_groups();

/// Small groupoids (at most 2 objects, 8 morphisms) for the hom-category
/// comparison.
std::vector<std::pair<std::string, FiniteGroupoid>> hom_catalog();

/// Cohomology fixtures; the first four are the pinned ones.
std::vector<std::pair<std::string, GroupAction>> cohomology_fixtures();

// Single-component perturbations. delta picks another parallel morphism
// (1-based offset within the hom set, skipping the current entry); the hom
// set must have at least two elements.
GaloisDescentDatum perturb_psi(GaloisDescentDatum d, int t, int s, int x,
                               int delta);
WeakAction perturb_alpha(WeakAction w, int t, int s, int x, int delta);
DescentMorphism perturb_eta(DescentMorphism m, int s, int x, int delta);

/// A connected two-object carrier with three parallel morphisms in every
/// hom set (the product of the pair groupoid on two objects with the
/// one-object carrier of Z/3); rich enough that any single-component
/// perturbation breaks naturality.
FiniteGroupoid connected_rich_carrier();

}  // namespace gdesc
