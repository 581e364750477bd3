#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gdesc/report.hpp"

namespace gdesc {

/// A finite groupoid as explicit tables: objects and morphisms are 0-based
/// indices, composition is a partial table on composable pairs, and every
/// morphism carries a two-sided inverse. comp(after, before) is read as
/// "before, then after" and is defined exactly when tgt(before) == src(after).
struct FiniteGroupoid {
  int num_objects = 0;
  std::vector<int> src;       // per morphism
  std::vector<int> tgt;       // per morphism
  std::vector<int> identity;  // per object -> morphism index
  std::vector<int> inverse;   // per morphism -> morphism index

  // composition keyed by after * num_morphisms + before
  std::unordered_map<std::uint64_t, int> comp;

  int num_morphisms() const { return static_cast<int>(src.size()); }

  void set_comp(int after, int before, int result) {
    comp[key(after, before)] = result;
  }

  /// -1 when the pair is not composable.
  int compose(int after, int before) const {
    auto it = comp.find(key(after, before));
    return it == comp.end() ? -1 : it->second;
  }

  int id_at(int object) const { return identity[object]; }
  int inv(int morphism) const { return inverse[morphism]; }

  std::vector<int> hom(int from, int to) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
      if (src[m] == from && tgt[m] == to) out.push_back(m);
    return out;
  }

  bool operator==(const FiniteGroupoid& other) const {
    return num_objects == other.num_objects && src == other.src &&
           tgt == other.tgt && identity == other.identity &&
           inverse == other.inverse && comp == other.comp;
  }

 private:
  std::uint64_t key(int after, int before) const {
    return static_cast<std::uint64_t>(after) *
               static_cast<std::uint64_t>(num_morphisms()) +
           static_cast<std::uint64_t>(before);
  }
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

/// Checks well-indexedness first (structural), then the groupoid axioms:
/// composition defined exactly on composable pairs and typed correctly,
/// identities neutral, associativity on all composable triples, two-sided
/// inverses. Reports the first violation with the offending indices.
Report validate_groupoid(const FiniteGroupoid& g);

// Constructors for the standard small carriers.
FiniteGroupoid terminal_groupoid();
FiniteGroupoid discrete_groupoid(int n);
/// The pair groupoid on n objects: exactly one morphism between any two.
FiniteGroupoid pair_groupoid(int n);

/// Coproduct with no cross-component morphisms; `obj_offset[i]` and
/// `mor_offset[i]` locate the i-th summand inside the union.
struct DisjointUnion {
  FiniteGroupoid gpd;
  std::vector<int> obj_offset;
  std::vector<int> mor_offset;
};
DisjointUnion disjoint_union(const std::vector<const FiniteGroupoid*>& parts);

/// Binary product: objects and morphisms are pairs (row-major indices),
/// everything componentwise.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a,
                                const FiniteGroupoid& b);
/// k-fold power of g; position 0 is the most significant index digit.
FiniteGroupoid power_groupoid(const FiniteGroupoid& g, int k);

/// Connected components double as isomorphism classes (every morphism is
/// invertible). class_of[x] is the component id, ordered by least member.
std::vector<int> iso_classes(const FiniteGroupoid& g);

}  // namespace gdesc
