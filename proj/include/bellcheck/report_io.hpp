#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellcheck/report.hpp"
#include "bellcheck/version.hpp"

namespace bellcheck {

/// A full tool run over one model: every check that was executed, plus the
/// model digest so results can be tied back to their input. No timestamps;
/// reports must be byte-stable.
struct Report {
  std::string model_digest;
  std::vector<CheckReport> checks;

  Verdict summary() const {
    bool vacuous = false;
    for (const auto& c : checks) {
      if (c.verdict == Verdict::Fail) return Verdict::Fail;
      if (c.verdict == Verdict::Vacuous) vacuous = true;
    }
    return vacuous ? Verdict::Vacuous : Verdict::Pass;
  }
};

inline nlohmann::json check_to_json(const CheckReport& c) {
  nlohmann::json j;
  j["condition"] = c.condition;
  j["verdict"] = to_string(c.verdict);
  j["checked"] = c.checked;
  j["vacuous_atoms"] = c.vacuous_atoms;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : c.witnesses)
    ws.push_back({{"where", w.where},
                  {"atom", w.atom},
                  {"assignment", w.assignment},
                  {"lhs", to_string(w.lhs)},
                  {"rhs", to_string(w.rhs)}});
  j["witnesses"] = std::move(ws);
  j["notes"] = c.notes;
  return j;
}

inline std::string report_to_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kVersion;
  j["model_digest"] = r.model_digest;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["summary"] = to_string(r.summary());
  return j.dump(2) + "\n";
}

inline std::string check_to_text(const CheckReport& c) {
  std::ostringstream os;
  os << "[" << to_string(c.verdict) << "] " << c.condition << " (" << c.checked
     << " comparisons";
  if (c.vacuous_atoms > 0) os << ", " << c.vacuous_atoms << " null atoms skipped";
  os << ")\n";
  for (const auto& n : c.notes) os << "    note: " << n << "\n";
  std::size_t shown = 0;
  for (const auto& w : c.witnesses) {
    if (shown++ == 8) {
      os << "    ... " << (c.witnesses.size() - 8) << " more witnesses\n";
      break;
    }
    os << "    witness " << w.where << " atom=" << w.atom << " [" << w.assignment
       << "] lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs) << "\n";
  }
  return os.str();
}

inline std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "model " << r.model_digest << "\n";
  for (const auto& c : r.checks) os << check_to_text(c);
  os << "summary: " << to_string(r.summary()) << "\n";
  return os.str();
}

}  // namespace bellcheck
