#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellcheck/axioms.hpp"
#include "bellcheck/gallery.hpp"
#include "bellcheck/locality.hpp"
#include "bellcheck/model_io.hpp"
#include "bellcheck/version.hpp"

namespace bellcheck {

/// Search configuration for the Bell-vs-slice-locality equivalence search.
struct ConjectureCaps {
  std::size_t max_points = 6;
  std::size_t max_histories = 8;
  std::size_t max_generators = 6;
};

enum class TrialStatus {
  ExcludedAxioms,   // localised-events conditions fail
  ExcludedSrla,     // some admissible pair/slice is not screened
  NoAdmissiblePairs,  // nothing spacelike to compare
  Evaluated,
};

struct TrialOutcome {
  TrialStatus status = TrialStatus::NoAdmissiblePairs;
  bool bell = false;      // Bell locality with the joint past, all spacelike pairs
  bool nouvelle = false;  // slice-block locality, all spacelike pairs and slices
};

/// Classifies one model for the equivalence search: filter on the
/// localised-events conditions and on slice screening for every admissible
/// timelike pair, then compare the joint-past and slice-block verdicts over
/// every spacelike pair of universe regions.
inline TrialOutcome evaluate_conjecture_trial(const Model& m) {
  TrialOutcome out;
  if (check_localised_axioms(m).failed()) {
    out.status = TrialStatus::ExcludedAxioms;
    return out;
  }
  const auto& regions = m.universe().regions();
  if (m.slices().empty()) {
    out.status = TrialStatus::NoAdmissiblePairs;
    return out;
  }
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].empty()) continue;
    for (std::size_t j = 0; j < regions.size(); ++j) {
      if (i == j || regions[j].empty()) continue;
      if (regions[i].points.intersects(regions[j].points)) continue;
      // x entirely in the causal past of y.
      const Bits past_of_y = m.site().causal_past(regions[j].points);
      if (!regions[i].points.is_subset_of(past_of_y)) continue;
      for (const auto& [name, slice] : m.slices()) {
        (void)name;
        if (check_srla(m, regions[i], regions[j], slice).failed()) {
          out.status = TrialStatus::ExcludedSrla;
          return out;
        }
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> spacelike_pairs;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].empty()) continue;
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      if (regions[j].empty()) continue;
      if (spacelike(m.site(), regions[i], regions[j]))
        spacelike_pairs.emplace_back(i, j);
    }
  }
  if (spacelike_pairs.empty()) {
    out.status = TrialStatus::NoAdmissiblePairs;
    return out;
  }

  out.status = TrialStatus::Evaluated;
  out.bell = true;
  out.nouvelle = true;
  for (const auto& [i, j] : spacelike_pairs) {
    if (check_bell_locality(m, regions[i], regions[j], PastSelector::joint_past()).failed())
      out.bell = false;
    for (const auto& [name, slice] : m.slices()) {
      (void)name;
      if (check_bell_locality(m, regions[i], regions[j], PastSelector::slice_block(slice))
              .failed())
        out.nouvelle = false;
    }
  }
  return out;
}

struct ConjectureCounterexample {
  std::size_t trial = 0;
  std::uint64_t model_seed = 0;
  bool bell = false;
  bool nouvelle = false;
  std::string digest;
  std::string serialized;  // model file contents, re-checkable from disk
};

struct ConjectureReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  ConjectureCaps caps;
  std::size_t excluded_axioms = 0;
  std::size_t excluded_srla = 0;
  std::size_t no_admissible_pairs = 0;
  std::size_t evaluated = 0;
  std::size_t bell_pass = 0;
  std::size_t nouvelle_pass = 0;
  std::vector<ConjectureCounterexample> counterexamples;

  bool found_counterexample() const { return !counterexamples.empty(); }
};

inline std::uint64_t conjecture_trial_seed(std::uint64_t master, std::size_t trial) {
  return detail::splitmix64(master ^ detail::splitmix64(static_cast<std::uint64_t>(trial)));
}

/// Random search for a model that separates Bell locality from slice-block
/// locality among models passing the screening filter. The outcome is a
/// finding, not a preset value; the report is reproducible from (seed,
/// trials, caps) alone.
inline ConjectureReport test_equivalence_conjecture(std::uint64_t seed, std::size_t trials,
                                                    const ConjectureCaps& caps = {}) {
  ConjectureReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.caps = caps;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t model_seed = conjecture_trial_seed(seed, t);
    const Model m =
        random_model(model_seed, caps.max_points, caps.max_histories, caps.max_generators);
    const TrialOutcome out = evaluate_conjecture_trial(m);
    switch (out.status) {
      case TrialStatus::ExcludedAxioms: rep.excluded_axioms++; break;
      case TrialStatus::ExcludedSrla: rep.excluded_srla++; break;
      case TrialStatus::NoAdmissiblePairs: rep.no_admissible_pairs++; break;
      case TrialStatus::Evaluated: {
        rep.evaluated++;
        if (out.bell) rep.bell_pass++;
        if (out.nouvelle) rep.nouvelle_pass++;
        if (out.bell != out.nouvelle) {
          ConjectureCounterexample ce;
          ce.trial = t;
          ce.model_seed = model_seed;
          ce.bell = out.bell;
          ce.nouvelle = out.nouvelle;
          ce.serialized = serialize_model(m);
          ce.digest = fnv1a_hex(ce.serialized);
          rep.counterexamples.push_back(std::move(ce));
        }
        break;
      }
    }
  }
  return rep;
}

inline std::string conjecture_report_to_json(const ConjectureReport& r) {
  nlohmann::json j;
  j["schema"] = kConjectureSchema;
  j["tool_version"] = kVersion;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["caps"] = {{"max_points", r.caps.max_points},
               {"max_histories", r.caps.max_histories},
               {"max_generators", r.caps.max_generators}};
  j["excluded_axioms"] = r.excluded_axioms;
  j["excluded_srla"] = r.excluded_srla;
  j["no_admissible_pairs"] = r.no_admissible_pairs;
  j["evaluated"] = r.evaluated;
  j["bell_pass"] = r.bell_pass;
  j["nouvelle_pass"] = r.nouvelle_pass;
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& ce : r.counterexamples)
    ces.push_back({{"trial", ce.trial},
                   {"model_seed", ce.model_seed},
                   {"bell", ce.bell},
                   {"nouvelle", ce.nouvelle},
                   {"digest", ce.digest}});
  j["counterexamples"] = std::move(ces);
  j["verdict"] = r.found_counterexample()
                     ? std::to_string(r.counterexamples.size()) + " counterexample(s) found"
                     : "no counterexample in " + std::to_string(r.evaluated) +
                           " evaluated trials of " + std::to_string(r.trials);
  return j.dump(2) + "\n";
}

}  // namespace bellcheck
