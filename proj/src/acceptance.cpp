#include "gdesc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gdesc/catalog.hpp"
#include "gdesc/cohomology.hpp"
#include "gdesc/descent.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/equivalence.hpp"
#include "gdesc/weak_action.hpp"

namespace gdesc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool galois_equal(const GaloisDescentDatum& a, const GaloisDescentDatum& b) {
  if (a.gamma.mul != b.gamma.mul || !(*a.g == *b.g)) return false;
  for (int s = 0; s < a.gamma.order; ++s)
    if (!a.f[s].same_maps(b.f[s])) return false;
  for (int t = 0; t < a.gamma.order; ++t)
    for (int s = 0; s < a.gamma.order; ++s)
      if (a.psi[t][s].component != b.psi[t][s].component) return false;
  return true;
}

CriterionResult criterion_induced_data_validate(
    const std::vector<NamedAction>& catalog) {
  CriterionResult r{1, "induced data validate (weak action -> datum)", false,
                    "", 0};
  const auto start = Clock::now();
  int checked = 0, strict = 0, twisted = 0;
  bool gamma_seen[4] = {false, false, false, false};
  for (const NamedAction& na : catalog) {
    if (!validate_weak_action(na.action).ok()) {
      r.detail = "weak action failed to validate: " + na.name;
      return r;
    }
    const GaloisDescentDatum d = action_to_descent(na.action);
    const Report rep = validate_galois_datum(d);
    if (!rep.ok()) {
      r.detail = "induced datum invalid for " + na.name + ": " +
                 rep.to_string();
      return r;
    }
    ++checked;
    (na.strict ? strict : twisted)++;
    switch (na.action.gamma.order) {
      case 2: gamma_seen[0] = true; break;
      case 3: gamma_seen[1] = true; break;
      case 4: gamma_seen[2] = true; break;
      case 6: gamma_seen[3] = true; break;
      default: break;
    }
  }
  r.seconds = elapsed(start);
  if (checked < 100) {
    r.detail = "only " + std::to_string(checked) + " instances";
    return r;
  }
  if (!(gamma_seen[0] && gamma_seen[1] && gamma_seen[2] && gamma_seen[3])) {
    r.detail = "missing a required group";
    return r;
  }
  if (strict == 0 || twisted == 0) {
    r.detail = "catalog not mixed";
    return r;
  }
  if (r.seconds >= 60.0) {
    r.detail = "too slow: " + std::to_string(r.seconds) + "s";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(checked) + " instances (" +
             std::to_string(strict) + " strict, " + std::to_string(twisted) +
             " twisted), 100% valid";
  return r;
}

CriterionResult criterion_conversion_bijection(
    const std::vector<NamedAction>& catalog) {
  CriterionResult r{2, "encoding bijection (galois <-> cover)", false, "", 0};
  const auto start = Clock::now();
  int valid = 0, faulted = 0;

  for (const NamedAction& na : catalog) {
    const GaloisDescentDatum d = action_to_descent(na.action);
    const CoverDescentDatum c = galois_to_cover(d);
    if (!galois_equal(cover_to_galois(c), d)) {
      r.detail = "round trip not the identity: " + na.name;
      return r;
    }
    if (!validate_cover_datum(c).ok()) {
      r.detail = "validity lost in cover form: " + na.name;
      return r;
    }
    ++valid;
  }

  // fault injection: a broken square must break the tetrahedron and back
  const GaloisDescentDatum inv3 = action_to_descent(
      ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
  const GaloisDescentDatum rich =
      action_to_descent(trivial_weak_action(z2(), share(connected_rich_carrier())));
  for (const GaloisDescentDatum* base : {&inv3, &rich}) {
    const int n = base->gamma.order;
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        for (int x = 0; x < base->g->num_objects; ++x)
          for (int delta = 1; delta <= 2; ++delta) {
            const GaloisDescentDatum bad = perturb_psi(*base, t, s, x, delta);
            if (validate_galois_datum(bad).ok()) {
              r.detail = "galois validator passed an injected fault";
              return r;
            }
            const CoverDescentDatum bad_cover = galois_to_cover(bad);
            if (validate_cover_datum(bad_cover).ok()) {
              r.detail = "cover validator passed an injected fault";
              return r;
            }
            if (!galois_equal(cover_to_galois(bad_cover), bad)) {
              r.detail = "round trip disturbed a faulted instance";
              return r;
            }
            ++faulted;
          }
  }
  r.seconds = elapsed(start);
  if (valid < 100 || faulted < 20) {
    r.detail = "instance counts too small";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(valid) + " valid + " + std::to_string(faulted) +
             " faulted instances, 100% agreement";
  return r;
}

CriterionResult criterion_effectivity() {
  CriterionResult r{3, "effectivity round trip (torsor base change)", false,
                    "", 0};
  const auto start = Clock::now();
  int runs = 0;
  for (const auto& [hname, h] : roundtrip_catalog())
    for (const auto& [gname, gamma] : roundtrip_groups()) {
      const RoundtripResult rt = roundtrip_check(h, gamma);
      if (rt.equivalence.undecided()) {
        r.detail = hname + " x " + gname + ": undecided";
        return r;
      }
      if (!rt.equivalence.equivalent()) {
        r.detail = hname + " x " + gname + ": not equivalent";
        return r;
      }
      ++runs;
    }
  r.seconds = elapsed(start);
  if (runs < 24) {
    r.detail = "catalog too small";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(runs) + " (groupoid, group) pairs, all witnessed";
  return r;
}

CriterionResult criterion_z2_golden(const std::vector<NamedAction>& catalog) {
  CriterionResult r{4, "order-two golden pairs (descend vs direct)", false,
                    "", 0};
  const auto start = Clock::now();
  int fixtures = 0;
  bool saw_inv3 = false, saw_triv2 = false;
  for (const NamedAction& na : catalog) {
    if (na.action.gamma.order != 2) continue;
    const GaloisDescentDatum d = action_to_descent(na.action);
    std::vector<std::pair<int, int>> pairs;
    try {
      pairs = z2_pair_objects(d);
    } catch (const std::invalid_argument&) {
      continue;  // not unit-strict; outside the golden comparison
    }
    const DescendedGroupoid desc = descend(d);
    std::vector<std::pair<int, int>> from_descend;
    const int e = d.gamma.id, s = 1 - d.gamma.id;
    for (const auto& [x, fam] : desc.objects) {
      if (fam[e] != d.g->identity[x]) {
        r.detail = na.name + ": phi_e not forced to the identity";
        return r;
      }
      from_descend.emplace_back(x, fam[s]);
    }
    std::sort(pairs.begin(), pairs.end());
    std::sort(from_descend.begin(), from_descend.end());
    if (pairs != from_descend) {
      r.detail = na.name + ": pair sets differ";
      return r;
    }
    ++fixtures;
    if (na.name.find("inv") != std::string::npos &&
        na.name.find("BZ3") != std::string::npos)
      saw_inv3 = true;
    if (na.name.find("trivial-BZ2") != std::string::npos) saw_triv2 = true;
  }
  r.seconds = elapsed(start);
  if (fixtures < 10 || !saw_inv3 || !saw_triv2) {
    r.detail = "only " + std::to_string(fixtures) +
               " fixtures or required ones missing";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(fixtures) + " fixtures, bit-exact";
  return r;
}

CriterionResult criterion_cohomology() {
  CriterionResult r{5, "cohomology cross-validation", false, "", 0};
  const auto start = Clock::now();

  struct Expect {
    std::string name;
    int classes;
    std::vector<int> stab_orders;  // sorted
  };
  const std::vector<Expect> pinned = {
      {"Z2-on-Z3-inversion", 1, {1}},
      {"Z2-on-Z2-trivial", 2, {2, 2}},
      {"Z3-on-Z3-trivial", 3, {3, 3, 3}},
      {"Z2-on-S3-trivial", 2, {2, 6}},
  };

  int checked = 0;
  for (const auto& [name, action] : cohomology_fixtures()) {
    const CohomologyComparison cmp = compare_with_descent(action);
    if (!cmp.ok) {
      r.detail = name + ": " + cmp.detail;
      return r;
    }
    for (const Expect& e : pinned)
      if (e.name == name) {
        if (cmp.oracle_classes != e.classes ||
            cmp.oracle_stabilizer_orders != e.stab_orders) {
          r.detail = name + ": class/stabilizer shape differs from the " +
                     "pinned values";
          return r;
        }
      }
    ++checked;
  }
  r.seconds = elapsed(start);
  if (checked < 4) {
    r.detail = "fixture list too small";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(checked) + " fixtures, descend matches the oracle";
  return r;
}

CriterionResult criterion_hom_descent() {
  CriterionResult r{6, "hom-category comparison over the cover", false, "", 0};
  const auto start = Clock::now();
  const auto catalog = hom_catalog();
  const FiniteGroup gamma = z2();
  int pairs = 0;
  for (const auto& [n1, h1] : catalog)
    for (const auto& [n2, h2] : catalog) {
      const HomDescentReport rep = hom_descent_check(h1, h2, gamma);
      if (rep.undecided) {
        r.detail = n1 + " -> " + n2 + ": undecided";
        return r;
      }
      if (!rep.ok()) {
        r.detail = n1 + " -> " + n2 + ": " + rep.detail;
        return r;
      }
      ++pairs;
    }
  r.seconds = elapsed(start);
  r.pass = true;
  r.detail = std::to_string(pairs) +
             " ordered pairs, comparison fully faithful and essentially " +
             "surjective";
  return r;
}

CriterionResult criterion_fault_sensitivity() {
  CriterionResult r{7, "single-fault sensitivity of the validators", false,
                    "", 0};
  const auto start = Clock::now();
  int faults = 0;

  // psi faults
  {
    const GaloisDescentDatum inv3 = action_to_descent(
        ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
    const GaloisDescentDatum rich = action_to_descent(
        trivial_weak_action(z2(), share(connected_rich_carrier())));
    for (const GaloisDescentDatum* base : {&inv3, &rich})
      for (int t = 0; t < 2; ++t)
        for (int s = 0; s < 2; ++s)
          for (int x = 0; x < base->g->num_objects; ++x)
            for (int delta = 1; delta <= 2; ++delta) {
              if (validate_galois_datum(perturb_psi(*base, t, s, x, delta))
                      .ok()) {
                r.detail = "silent pass on a psi fault";
                return r;
              }
              ++faults;
            }
  }
  // alpha faults
  {
    const WeakAction inv3 =
        ba_strict_action(inversion_action(z2(), z3(), {0, 1}));
    const WeakAction rich =
        trivial_weak_action(z2(), share(connected_rich_carrier()));
    for (const WeakAction* base : {&inv3, &rich})
      for (int t = 0; t < 2; ++t)
        for (int s = 0; s < 2; ++s)
          for (int x = 0; x < base->g->num_objects; ++x)
            for (int delta = 1; delta <= 2; ++delta) {
              if (validate_weak_action(perturb_alpha(*base, t, s, x, delta))
                      .ok()) {
                r.detail = "silent pass on an alpha fault";
                return r;
              }
              ++faults;
            }
  }
  // eta faults on the identity morphism of a connected carrier
  {
    const GaloisDescentDatum rich = action_to_descent(
        trivial_weak_action(z2(), share(connected_rich_carrier())));
    const DescentMorphism id = identity_descent_morphism(rich);
    for (int s = 0; s < 2; ++s)
      for (int x = 0; x < rich.g->num_objects; ++x)
        for (int delta = 1; delta <= 2; ++delta) {
          if (validate_descent_morphism(perturb_eta(id, s, x, delta)).ok()) {
            r.detail = "silent pass on an eta fault";
            return r;
          }
          ++faults;
        }
  }
  r.seconds = elapsed(start);
  if (faults < 50) {
    r.detail = "only " + std::to_string(faults) + " faults injected";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(faults) + " faults, all detected";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed) {
  const auto start = Clock::now();
  std::vector<CriterionResult> results;
  const std::vector<NamedAction> catalog = weak_action_catalog(seed);

  results.push_back(criterion_induced_data_validate(catalog));
  results.push_back(criterion_conversion_bijection(catalog));
  results.push_back(criterion_effectivity());
  results.push_back(criterion_z2_golden(catalog));
  results.push_back(criterion_cohomology());
  results.push_back(criterion_hom_descent());
  results.push_back(criterion_fault_sensitivity());

  CriterionResult timing{8, "full suite wall clock", false, "", 0};
  timing.seconds = elapsed(start);
  timing.pass = timing.seconds < 300.0;
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << timing.seconds << "s (bound 300s)";
  timing.detail = ss.str();
  results.push_back(timing);
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace gdesc
