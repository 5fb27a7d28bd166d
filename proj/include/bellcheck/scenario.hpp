#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bellcheck/causal_site.hpp"
#include "bellcheck/event_algebra.hpp"
#include "bellcheck/model.hpp"

namespace bellcheck {

/// Bindings of setting and outcome events to the two wings of an EPRB-style
/// experiment. The setting/outcome variables range over {event, complement}.
struct EPRBScenario {
  Region wing_a;
  Region wing_b;
  Event setting_a;
  Event setting_b;
  Event outcome_a;
  Event outcome_b;
  std::string setting_a_name = "As";
  std::string setting_b_name = "Bs";
  std::string outcome_a_name = "Ao";
  std::string outcome_b_name = "Bo";
  PastSelector past = PastSelector::joint_past();
  // For the separability-of-states checks: a declared split of the past
  // region into a part behind each wing.
  std::optional<std::pair<Region, Region>> past_partition;
};

/// Operational consistency of localisation: settings and outcomes must live
/// in the algebras of the wings they are detected in. Wings must be
/// spacelike unless the past selector is Custom (timelike set-ups are only
/// meaningful with an explicitly chosen past).
inline void validate_scenario(const Model& m, const EPRBScenario& scen) {
  m.site().check_region(scen.wing_a);
  m.site().check_region(scen.wing_b);
  if (scen.past.kind != PastSelector::Kind::Custom &&
      !spacelike(m.site(), scen.wing_a, scen.wing_b))
    throw InputError("wings '" + scen.wing_a.name + "' and '" + scen.wing_b.name +
                     "' are not spacelike; use a custom past region");
  const Algebra alg_a = region_algebra(m, scen.wing_a);
  const Algebra alg_b = region_algebra(m, scen.wing_b);
  auto require = [&](const Algebra& alg, const Event& e, const std::string& what,
                     const std::string& wing) {
    if (!alg.contains(e))
      throw InputError(what + " is not an event of wing '" + wing + "'");
  };
  require(alg_a, scen.setting_a, "setting " + scen.setting_a_name, scen.wing_a.name);
  require(alg_a, scen.outcome_a, "outcome " + scen.outcome_a_name, scen.wing_a.name);
  require(alg_b, scen.setting_b, "setting " + scen.setting_b_name, scen.wing_b.name);
  require(alg_b, scen.outcome_b, "outcome " + scen.outcome_b_name, scen.wing_b.name);
  if (scen.past_partition) {
    m.site().check_region(scen.past_partition->first);
    m.site().check_region(scen.past_partition->second);
  }
}

inline Region scenario_past(const Model& m, const EPRBScenario& scen) {
  return resolve_past(m.site(), scen.wing_a, scen.wing_b, scen.past);
}

}  // namespace bellcheck
