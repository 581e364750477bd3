#pragma once

#include <vector>

#include "gdesc/functor.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"
#include "gdesc/weak_action.hpp"

namespace gdesc {

/// A labeled copy of the base carrier: the twist of g by sigma. The finite
/// model keeps the underlying tables identical; can() is the canonical
/// comparison to the base, the identity on underlying data.
struct TwistedGroupoid {
  GroupoidPtr base;
  int sigma = 0;

  GroupoidFunctor can() const { return identity_functor(base); }
};

/// Galois-indexed 2-descent datum on g: a 1-isomorphism f[sigma] per group
/// element (the underlying functor of ^sigma g -> g after the canonical
/// identification) and a 2-isomorphism psi[tau][sigma]:
/// f[sigma] . f[tau] => f[tau*sigma] per pair, subject to the cocycle
/// square over every triple.
struct GaloisDescentDatum {
  FiniteGroup gamma;
  GroupoidPtr g;
  std::vector<GroupoidFunctor> f;
  std::vector<std::vector<NatIso>> psi;
};

/// The same data in cover form: phi is stored as the family of component
/// functors of one equivalence between coproducts over the double overlap
/// (block sigma), psi as the family of components over the triple overlap
/// (block (tau, sigma)). Validation runs at the coproduct level.
struct CoverDescentDatum {
  FiniteGroup gamma;
  GroupoidPtr g;
  std::vector<GroupoidFunctor> phi;            // tagged by sigma
  std::vector<std::vector<NatIso>> psi;        // tagged by (tau, sigma)
};

/// Checks endpoints and naturality of every psi, then the cocycle square
/// for every (gamma, tau, sigma): vcompose(psi[g t][s], lwhisker(f[s],
/// psi[g][t])) against vcompose(psi[g][t s], rwhisker(psi[t][s], f[g])).
/// Reports the violating triple.
Report validate_galois_datum(const GaloisDescentDatum& d);

/// Validates the tetrahedron of the cover form at the coproduct level: the
/// double/triple/quadruple-overlap carriers are materialized as disjoint
/// unions, the pulled-back 2-morphisms assembled blockwise, and the single
/// compatibility square of 2-morphisms checked on the quadruple overlap.
Report validate_cover_datum(const CoverDescentDatum& d);

/// The canonical re-indexings of the two encodings; round trips are exact
/// identities on the data tables, and validity transfers both ways.
CoverDescentDatum galois_to_cover(const GaloisDescentDatum& d);
GaloisDescentDatum cover_to_galois(const CoverDescentDatum& c);

/// The datum canonically determined by a weak action:
/// f[sigma] = mu(sigma^-1) . can_sigma and psi[tau][sigma] the composite of
/// the canonical identifications with alpha[sigma^-1][tau^-1]. That the
/// result validates is theorem content, exercised by the test suite.
GaloisDescentDatum action_to_descent(const WeakAction& w);

/// A morphism of data: a functor between the carriers together with
/// eta[sigma]: F . f1[sigma] => f2[sigma] . ^sigma F, subject to the
/// compatibility prism over every pair.
struct DescentMorphism {
  GaloisDescentDatum source;
  GaloisDescentDatum target;
  GroupoidFunctor F;
  std::vector<NatIso> eta;
};

Report validate_descent_morphism(const DescentMorphism& m);

/// Componentwise composite with pasted eta.
DescentMorphism compose_descent_morphisms(const DescentMorphism& second,
                                          const DescentMorphism& first);

DescentMorphism identity_descent_morphism(const GaloisDescentDatum& d);

}  // namespace gdesc
