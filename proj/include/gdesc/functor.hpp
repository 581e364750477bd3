#pragma once

#include <vector>

#include "gdesc/groupoid.hpp"
#include "gdesc/report.hpp"

namespace gdesc {

/// A functor between finite groupoids, stored as its object and morphism
/// maps. Source and target are shared immutable carriers.
struct GroupoidFunctor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int obj(int x) const { return obj_map[x]; }
  int mor(int m) const { return mor_map[m]; }

  bool same_maps(const GroupoidFunctor& other) const {
    return obj_map == other.obj_map && mor_map == other.mor_map;
  }
};

/// Two carriers agree if they are the same allocation or structurally equal.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

GroupoidFunctor identity_functor(const GroupoidPtr& g);

/// Checks endpoint tables and preservation of src/tgt, identities and
/// composition (inverses follow).
Report validate_functor(const GroupoidFunctor& f);

/// f after g; requires target of g to agree with source of f.
GroupoidFunctor compose_functors(const GroupoidFunctor& f,
                                 const GroupoidFunctor& g);

/// A natural isomorphism between parallel functors; component[x] is a
/// morphism from(x) -> to(x) in the common target groupoid. Every component
/// of a natural transformation between groupoid-valued functors is
/// automatically invertible.
struct NatIso {
  GroupoidFunctor from;
  GroupoidFunctor to;
  std::vector<int> component;

  int at(int x) const { return component[x]; }
};

Report validate_nat_iso(const NatIso& a);

NatIso identity_nat_iso(const GroupoidFunctor& f);
NatIso inverse_nat_iso(const NatIso& a);

/// Vertical composition: a then b, componentwise in the target groupoid.
NatIso vcompose(const NatIso& b, const NatIso& a);

/// (F)_*(a): postcompose both endpoints with F, components F(a_x).
NatIso left_whisker(const GroupoidFunctor& f, const NatIso& a);

/// (F)^*(a): precompose both endpoints with F, components a_{F(x)}.
NatIso right_whisker(const NatIso& a, const GroupoidFunctor& f);

bool nat_iso_equal(const NatIso& a, const NatIso& b);

/// All functors a -> b, in lexicographic order of (object map, morphism
/// map). Intended for small carriers.
std::vector<GroupoidFunctor> enumerate_functors(const GroupoidPtr& a,
                                                const GroupoidPtr& b);

/// All natural isomorphisms f => g for parallel f, g: enumerate a component
/// on one object per connected component of the source, propagate along a
/// spanning tree, verify naturality on every morphism.
std::vector<NatIso> enumerate_nat_isos(const GroupoidFunctor& f,
                                       const GroupoidFunctor& g);

}  // namespace gdesc
