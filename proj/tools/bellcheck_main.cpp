// Command-line front end: load models, run condition suites, compute CHSH
// and local-polytope verdicts, emit gallery models, run the equivalence
// search. Exit codes: 0 all pass, 1 some condition failed, 2 input error,
// 3 conjecture counterexample found.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bellcheck/bellcheck.hpp"

namespace {

using namespace bellcheck;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCounterexample = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << data;
}

struct SuiteRun {
  std::vector<CheckReport> checks;
  std::vector<std::string> skipped;

  void run(const std::string& label, const std::function<CheckReport()>& fn) {
    try {
      checks.push_back(fn());
    } catch (const InputError& e) {
      skipped.push_back(label + ": " + e.what());
    }
  }
};

std::vector<std::pair<Region, Region>> spacelike_universe_pairs(const Model& m) {
  std::vector<std::pair<Region, Region>> out;
  const auto& regions = m.universe().regions();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].empty()) continue;
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      if (regions[j].empty()) continue;
      if (spacelike(m.site(), regions[i], regions[j])) out.emplace_back(regions[i], regions[j]);
    }
  }
  return out;
}

void run_bell_like(SuiteRun& suite, const LoadedModel& lm, const PastSelector& sel,
                   bool weakened) {
  const Model& m = lm.model;
  auto one = [&](const Region& a, const Region& b) {
    suite.run("bell(" + a.name + "," + b.name + ")", [&] {
      return weakened ? check_bell_locality_weakened(m, a, b, sel)
                      : check_bell_locality(m, a, b, sel);
    });
  };
  if (lm.scenario) {
    one(lm.scenario->wing_a, lm.scenario->wing_b);
  } else {
    for (const auto& [a, b] : spacelike_universe_pairs(m)) one(a, b);
  }
}

void run_srla_suite(SuiteRun& suite, const Model& m) {
  const auto& regions = m.universe().regions();
  for (const auto& [sname, slice] : m.slices()) {
    (void)sname;
    for (std::size_t i = 0; i < regions.size(); ++i) {
      if (regions[i].empty()) continue;
      for (std::size_t j = 0; j < regions.size(); ++j) {
        if (i == j || regions[j].empty()) continue;
        if (regions[i].points.intersects(regions[j].points)) continue;
        if (!regions[i].points.is_subset_of(m.site().causal_past(regions[j].points))) continue;
        suite.run("srla(" + regions[i].name + "," + regions[j].name + ")", [&, i, j] {
          return check_srla(m, regions[i], regions[j], slice);
        });
      }
    }
  }
}

int cmd_check(const std::string& path, const std::string& suite_name,
              const std::string& past_override, const std::string& format) {
  LoadedModel lm = load_model_file(path);
  if (!past_override.empty() && lm.scenario)
    lm.scenario->past = parse_past_selector(lm.model, past_override);
  const Model& m = lm.model;
  std::optional<PastSelector> no_scen_past;
  if (!past_override.empty()) no_scen_past = parse_past_selector(m, past_override);

  SuiteRun suite;
  auto need_scenario = [&]() -> const EPRBScenario& {
    if (!lm.scenario) throw InputError("suite '" + suite_name + "' requires a scenario");
    return *lm.scenario;
  };

  const PastSelector default_sel =
      lm.scenario ? lm.scenario->past
                  : no_scen_past.value_or(PastSelector::joint_past());

  if (suite_name == "axioms" || suite_name == "all")
    suite.run("axioms", [&] { return check_localised_axioms(m); });
  if (suite_name == "separability" || suite_name == "all")
    suite.run("separability", [&] { return check_separability_universe(m); });
  if (suite_name == "bell" || suite_name == "all") run_bell_like(suite, lm, default_sel, false);
  if (suite_name == "freedom" || suite_name == "all")
    suite.run("freedom", [&] { return check_freedom_of_settings(m, need_scenario()); });
  if (suite_name == "factorisability" || suite_name == "all")
    suite.run("factorisability", [&] { return check_factorisability(m, need_scenario()); });
  if (suite_name == "nosignal" || suite_name == "all")
    suite.run("no-signalling", [&] { return check_no_signalling(m, need_scenario()); });
  if (suite_name == "jarrett" || suite_name == "all") {
    suite.run("outcome-independence",
              [&] { return check_outcome_independence(m, need_scenario()); });
    suite.run("parameter-independence",
              [&] { return check_parameter_independence(m, need_scenario()); });
    suite.run("jarrett", [&] { return check_jarrett_decomposition(m, need_scenario()); });
  }
  if (suite_name == "howard" || suite_name == "all")
    suite.run("howard",
              [&] { return check_howard_separability_of_states(m, need_scenario()); });
  if (suite_name == "srla" || suite_name == "all") run_srla_suite(suite, m);
  if (suite_name == "nouvelle" || suite_name == "all") {
    for (const auto& [sname, slice] : m.slices()) {
      (void)sname;
      run_bell_like(suite, lm, PastSelector::slice_block(slice), false);
    }
  }
  if (suite_name == "weakened" || suite_name == "all") {
    bool any_nonsep = false;
    for (const auto& g : m.generators()) any_nonsep |= g.nonseparable;
    if (any_nonsep || suite_name == "weakened")
      run_bell_like(suite, lm, default_sel, true);
  }

  static const std::vector<std::string> known = {
      "all",    "axioms",  "separability", "bell",     "freedom", "factorisability",
      "nosignal", "jarrett", "howard",     "srla",     "nouvelle", "weakened"};
  if (std::find(known.begin(), known.end(), suite_name) == known.end())
    throw InputError("unknown suite '" + suite_name + "'");
  if (suite.checks.empty() && suite.skipped.empty())
    throw InputError("suite '" + suite_name + "' has nothing to check for this model");

  Report rep;
  rep.model_digest = lm.digest;
  rep.checks = suite.checks;
  if (format == "machine") {
    std::cout << report_to_json(rep);
  } else {
    std::cout << report_to_text(rep);
    for (const auto& s : suite.skipped) std::cout << "skipped: " << s << "\n";
    if (rep.summary() == Verdict::Vacuous)
      std::cout << "warning: some checks were vacuous (every conditioning event null)\n";
  }
  return rep.summary() == Verdict::Fail ? kExitFail : kExitPass;
}

void print_lhv(const BehaviorTable& t) {
  const ChshResult chsh = chsh_value(t);
  std::cout << "CHSH = " << to_string(chsh.value) << " (= " << to_double(chsh.value)
            << ") at convention [" << chsh.convention() << "]\n";
  const LhvResult lhv = lhv_membership(t);
  if (lhv.member()) {
    std::cout << "LHV: member\n";
    for (int k = 0; k < 16; ++k)
      if (lhv.decomposition->weights[k] != 0)
        std::cout << "  strategy " << k << " weight " << to_string(lhv.decomposition->weights[k])
                  << "\n";
  } else {
    std::cout << "LHV: NotLocal (" << lhv.violated_facet << " = " << to_string(lhv.facet_value)
              << ")\n";
  }
}

int cmd_chsh(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    LoadedModel lm = parse_model_text(text);
    if (!lm.scenario) throw InputError("model file has no scenario; cannot build a behavior");
    print_lhv(behavior_from_model(lm.model, *lm.scenario));
  } else {
    print_lhv(behavior_from_text(text));
  }
  return kExitPass;
}

int cmd_conjecture(std::uint64_t seed, std::size_t trials, const ConjectureCaps& caps,
                   const std::string& out_dir) {
  const ConjectureReport rep = test_equivalence_conjecture(seed, trials, caps);
  const std::string json = conjecture_report_to_json(rep);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/report.json", json);
    for (const auto& ce : rep.counterexamples)
      write_file(out_dir + "/counterexample_" + std::to_string(ce.trial) + ".json",
                 ce.serialized);
  }
  std::cout << json;
  return rep.found_counterexample() ? kExitCounterexample : kExitPass;
}

int cmd_gallery_list() {
  for (const auto& e : gallery()) std::cout << e.name << " - " << e.description << "\n";
  std::cout << "tsirelson_approx - singlet correlations at the CHSH-maximal angles, "
               "rational approximation (behavior table)\n";
  return kExitPass;
}

int cmd_gallery_emit(const std::string& name, const std::string& path, std::uint64_t cap) {
  if (name == "tsirelson_approx") {
    write_file(path, behavior_to_text(tsirelson_approx(Integer(cap)).table));
    return kExitPass;
  }
  const GalleryModel gm = gallery_entry(name).build();
  write_file(path, serialize_model(gm.model, gm.scenario));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locality-condition checker for finite stochastic processes in discrete "
               "spacetimes"};
  app.require_subcommand(1);

  std::string model_path, suite = "all", past_override, format = "text";
  auto* check = app.add_subcommand("check", "run condition suites against a model file");
  check->add_option("model", model_path, "model file (JSON)")->required();
  check->add_option("--suite", suite,
                    "all|axioms|separability|bell|freedom|factorisability|nosignal|jarrett|"
                    "howard|srla|nouvelle|weakened");
  check->add_option("--past", past_override,
                    "past selector override: mutual|joint|past-a|past-b|slice:<name>|custom:<region>");
  check->add_option("--format", format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string chsh_path;
  auto* chsh = app.add_subcommand("chsh", "CHSH value and local-polytope verdict");
  chsh->add_option("path", chsh_path, "model file (JSON, with scenario) or behavior table")
      ->required();

  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  ConjectureCaps caps;
  std::string out_dir;
  auto* conj = app.add_subcommand(
      "conjecture", "search for a model separating joint-past and slice-block locality");
  conj->add_option("--seed", seed, "master seed");
  conj->add_option("--trials", trials, "number of random models");
  conj->add_option("--max-points", caps.max_points, "site size cap");
  conj->add_option("--max-histories", caps.max_histories, "history space cap");
  conj->add_option("--max-generators", caps.max_generators, "generator count cap");
  conj->add_option("--out", out_dir, "directory for report.json and counterexample files");

  auto* gal = app.add_subcommand("gallery", "built-in model gallery");
  gal->require_subcommand(1);
  auto* gal_list = gal->add_subcommand("list", "list gallery models");
  std::string gal_name, gal_path;
  std::uint64_t gal_cap = 10000;
  auto* gal_emit = gal->add_subcommand("emit", "write a gallery model to a file");
  gal_emit->add_option("name", gal_name, "gallery model name")->required();
  gal_emit->add_option("path", gal_path, "output path ('-' for stdout)")->required();
  gal_emit->add_option("--cap", gal_cap, "denominator cap for tsirelson_approx");

  try {
    app.parse(argc, argv);
    if (*check) return cmd_check(model_path, suite, past_override, format);
    if (*chsh) return cmd_chsh(chsh_path);
    if (*conj) return cmd_conjecture(seed, trials, caps, out_dir);
    if (*gal_list) return cmd_gallery_list();
    if (*gal_emit) return cmd_gallery_emit(gal_name, gal_path, gal_cap);
    std::cerr << app.help();
    return kExitInputError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}
