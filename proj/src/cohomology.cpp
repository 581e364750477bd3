#include "gdesc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gdesc/descent.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/weak_action.hpp"

namespace gdesc {

CocycleSet h1(const GroupAction& action) {
  {
    const Report r = validate_action(action);
    if (!r.ok()) throw std::invalid_argument("h1: " + r.to_string());
  }
  const FiniteGroup& gamma = action.gamma;
  const FiniteGroup& a = action.a;
  if (gamma.order > 24 || a.order > 24)
    throw std::invalid_argument("h1: size cap exceeded");
  double space = 1;
  for (int i = 0; i < gamma.order; ++i) space *= a.order;
  if (space > 2e7) throw std::invalid_argument("h1: search space too large");

  CocycleSet out;
  out.gamma = gamma;
  out.a = a;
  out.action = action;

  // exhaustive sweep over all maps gamma -> a
  std::vector<int> z(gamma.order, 0);
  while (true) {
    bool cocycle = true;
    for (int t = 0; t < gamma.order && cocycle; ++t)
      for (int s = 0; s < gamma.order && cocycle; ++s)
        if (z[gamma.op(t, s)] != a.op(z[t], action.act(t, z[s])))
          cocycle = false;
    if (cocycle) out.cocycles.push_back(z);
    int i = gamma.order - 1;
    while (i >= 0 && z[i] == a.order - 1) z[i--] = 0;
    if (i < 0) break;
    ++z[i];
  }

  // orbit decomposition under twisted conjugation
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i)
    index[out.cocycles[i]] = static_cast<int>(i);
  std::vector<bool> seen(out.cocycles.size(), false);
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> members;
    std::vector<int> stab;
    for (int b = 0; b < a.order; ++b) {
      std::vector<int> w(gamma.order);
      for (int s = 0; s < gamma.order; ++s)
        w[s] = a.op(a.inv[b],
                    a.op(out.cocycles[i][s], action.act(s, b)));
      const auto it = index.find(w);
      if (it == index.end())
        throw std::logic_error("h1: twisted conjugate left the cocycle set");
      if (!seen[it->second]) {
        seen[it->second] = true;
        members.push_back(it->second);
      }
      if (w == out.cocycles[i]) stab.push_back(b);
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
    out.stabilizers.push_back(std::move(stab));
  }
  return out;
}

CohomologyComparison compare_with_descent(const GroupAction& action) {
  CohomologyComparison cmp;
  const FiniteGroup& gamma = action.gamma;
  const FiniteGroup& a = action.a;

  const CocycleSet oracle = h1(action);
  cmp.oracle_classes = static_cast<int>(oracle.classes.size());
  for (const auto& st : oracle.stabilizers)
    cmp.oracle_stabilizer_orders.push_back(static_cast<int>(st.size()));
  std::sort(cmp.oracle_stabilizer_orders.begin(),
            cmp.oracle_stabilizer_orders.end());

  // strict action of gamma on B(a) through theta, then the induced datum
  const GroupoidPtr ba = share(as_one_object_groupoid(a));
  std::vector<GroupoidFunctor> h(gamma.order);
  for (int s = 0; s < gamma.order; ++s) {
    GroupoidFunctor f;
    f.source = ba;
    f.target = ba;
    f.obj_map = {0};
    f.mor_map = action.aut[s];
    h[s] = std::move(f);
  }
  const WeakAction w = strict_action(gamma, ba, h);
  const GaloisDescentDatum d = action_to_descent(w);
  const DescendedGroupoid desc = descend(d);

  // dictionary: descended family phi corresponds to z[s] = theta_s(phi[s])
  std::map<std::vector<int>, int> desc_index;
  for (std::size_t i = 0; i < desc.objects.size(); ++i) {
    std::vector<int> z(gamma.order);
    for (int s = 0; s < gamma.order; ++s)
      z[s] = action.act(s, desc.objects[i].second[s]);
    if (desc_index.count(z)) {
      cmp.detail = "dictionary not injective";
      return cmp;
    }
    desc_index[z] = static_cast<int>(i);
  }
  if (desc_index.size() != oracle.cocycles.size()) {
    cmp.detail = "object count mismatch: " +
                 std::to_string(desc_index.size()) + " descended vs " +
                 std::to_string(oracle.cocycles.size()) + " cocycles";
    return cmp;
  }
  for (const auto& z : oracle.cocycles)
    if (!desc_index.count(z)) {
      cmp.detail = "cocycle missing among descended objects";
      return cmp;
    }

  // classes must correspond under the dictionary
  const std::vector<int> desc_cls = iso_classes(desc.gpd);
  int ncls = 0;
  for (int c : desc_cls) ncls = std::max(ncls, c + 1);
  cmp.descended_classes = ncls;
  if (ncls != cmp.oracle_classes) {
    cmp.detail = "class count mismatch";
    return cmp;
  }
  for (std::size_t ci = 0; ci < oracle.classes.size(); ++ci) {
    std::vector<int> mapped;
    for (int zi : oracle.classes[ci])
      mapped.push_back(desc_cls[desc_index.at(oracle.cocycles[zi])]);
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    if (mapped.size() != 1) {
      cmp.detail = "oracle class splits across descended classes";
      return cmp;
    }
    // automorphisms of any member must equal the twisted stabilizer, as
    // subsets of a (morphisms of B(a) are elements of a)
    const int obj = desc_index.at(oracle.cocycles[oracle.classes[ci][0]]);
    std::vector<int> auts;
    for (int k = 0; k < desc.gpd.num_morphisms(); ++k)
      if (desc.gpd.src[k] == obj && desc.gpd.tgt[k] == obj)
        auts.push_back(desc.underlying[k]);
    std::sort(auts.begin(), auts.end());
    std::vector<int> stab = oracle.stabilizers[ci];
    std::sort(stab.begin(), stab.end());
    if (auts != stab) {
      cmp.detail = "automorphisms differ from twisted stabilizer";
      return cmp;
    }
    cmp.descended_automorphism_orders.push_back(
        static_cast<int>(auts.size()));
  }
  std::sort(cmp.descended_automorphism_orders.begin(),
            cmp.descended_automorphism_orders.end());
  if (cmp.descended_automorphism_orders != cmp.oracle_stabilizer_orders) {
    cmp.detail = "stabilizer orders mismatch";
    return cmp;
  }

  cmp.ok = true;
  return cmp;
}

}  // namespace gdesc
