#pragma once

#include <optional>
#include <vector>

#include "gdesc/descent_data.hpp"
#include "gdesc/equivalence.hpp"
#include "gdesc/functor.hpp"

namespace gdesc {

/// The groupoid of homotopy fixed points of a datum: objects are pairs
/// (x, {phi_sigma}) with phi_sigma: x -> f_sigma(x) satisfying
/// phi_{tau sigma} = psi[tau][sigma]_x . f_sigma(phi_tau) . phi_sigma for
/// every pair; morphisms are carrier morphisms commuting with the families.
/// Enumeration order is lexicographic in (object, sigma-ordered morphism
/// indices), so serialization is deterministic.
struct DescendedGroupoid {
  FiniteGroupoid gpd;
  GroupoidPtr base;
  // provenance: per descended object its carrier object and full family
  std::vector<std::pair<int, std::vector<int>>> objects;
  std::vector<int> underlying;  // per descended morphism: carrier morphism
  GroupoidFunctor forgetful;    // needs share(gpd) as source
};

/// Requires a validating datum (throws std::invalid_argument otherwise).
DescendedGroupoid descend(const GaloisDescentDatum& d);

/// The functor induced on homotopy fixed points by a valid morphism of
/// data: (x, {phi}) -> (F x, {eta_sigma[x] . F(phi_sigma)}).
GroupoidFunctor descend_morphism(const DescentMorphism& m,
                                 const DescendedGroupoid& source,
                                 const DescendedGroupoid& target);

/// The canonical datum of the base change of h along the split
/// |Gamma|-point torsor cover: carrier the Gamma-fold power of h (sections
/// of the constant family), f_sigma the coordinate relabeling
/// (F_sigma y)_p = y_{sigma p}, psi the identity.
GaloisDescentDatum base_change_torsor(const FiniteGroupoid& h,
                                      const FiniteGroup& gamma);

struct RoundtripResult {
  EquivResult equivalence;
  int descended_objects = 0;
};

/// Effectivity at desk scale: descends the canonical torsor datum of h and
/// compares the result with h itself.
RoundtripResult roundtrip_check(const FiniteGroupoid& h,
                                const FiniteGroup& gamma, int budget = 64);

/// For |Gamma| = 2 data with strict units (f_e the identity and unit psi
/// normalized), the pair set computed directly from the one-generator
/// closure condition psi[s][s]_x . f_s(phi) . phi = id_x. Kept independent
/// of descend; the golden tests compare the two bit-exactly.
std::vector<std::pair<int, int>> z2_pair_objects(const GaloisDescentDatum& d);

struct HomDescentReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  bool undecided = false;
  int downstairs_functors = 0;   // objects of Hom(h1, h2)
  int descent_morphisms = 0;     // objects of the descent hom category
  std::string detail;

  bool ok() const {
    return !undecided && essentially_surjective && fully_faithful;
  }
};

/// Compares Hom(h1, h2) with the category of descent morphisms between the
/// canonical torsor data: enumerates functors and natural isomorphisms
/// downstairs, descent morphisms over the cover (coordinatewise functors
/// with coherent eta) and their modifications upstairs, and checks that the
/// canonical comparison (diagonal functor, identity eta) is essentially
/// surjective and fully faithful.
HomDescentReport hom_descent_check(const FiniteGroupoid& h1,
                                   const FiniteGroupoid& h2,
                                   const FiniteGroup& gamma,
                                   int max_objects = 2, int max_morphisms = 8);

}  // namespace gdesc
