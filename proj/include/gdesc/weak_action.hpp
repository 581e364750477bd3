#pragma once

#include <optional>
#include <vector>

#include "gdesc/functor.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"

namespace gdesc {

/// A weak action of a finite group on a finite groupoid: endofunctors
/// mu[sigma], coherence isomorphisms alpha[tau][sigma]: mu(tau) . mu(sigma)
/// => mu(tau*sigma), and a unit iso beta: mu(e) => id. Validity means the
/// associativity squares agree on all triples and both unit laws hold.
struct WeakAction {
  FiniteGroup gamma;
  GroupoidPtr g;
  std::vector<GroupoidFunctor> mu;
  std::vector<std::vector<NatIso>> alpha;
  NatIso beta;
};

/// Structural pass first (endpoints, naturality of every alpha and beta),
/// then for every (gamma, tau, sigma) the two composites
/// mu(g).mu(t).mu(s) => mu(g t s) are compared componentwise, and for every
/// sigma the unit laws mu(sigma)_*(beta) = alpha[sigma][e] and
/// mu(sigma)^*(beta) = alpha[e][sigma]. Reports the first violation.
Report validate_weak_action(const WeakAction& w);

/// Builds the strict instance of a homomorphism gamma -> Aut(g): identity
/// alpha and beta. Throws if h is not strictly multiplicative or h(e) != id.
WeakAction strict_action(const FiniteGroup& gamma, const GroupoidPtr& g,
                         const std::vector<GroupoidFunctor>& h);

/// Perturbs alpha by a 2-cochain of natural automorphisms:
/// alpha'[t][s] = c[t][s] . alpha[t][s] where c[t][s] is a component table
/// of a natural automorphism of mu(t*s). The result is re-validated;
/// non-coherent perturbations are rejected (nullopt).
std::optional<WeakAction> twist_by_cochain(
    const WeakAction& w, const std::vector<std::vector<std::vector<int>>>& c);

/// All natural automorphisms of f, as component tables.
std::vector<std::vector<int>> natural_automorphisms(const GroupoidFunctor& f);

/// Transports a weak action across a relabeling of its carrier.
WeakAction relabel_weak_action(const WeakAction& w,
                               const std::vector<int>& obj_perm,
                               const std::vector<int>& mor_perm);

}  // namespace gdesc
