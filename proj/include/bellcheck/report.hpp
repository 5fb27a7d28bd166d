#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bellcheck/rational.hpp"

namespace bellcheck {

enum class Verdict { Pass, Fail, Vacuous };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

/// One counterexample to a condition: the conditioning atom, the event
/// assignment under test, and the two sides that should have been equal.
struct Witness {
  std::string where;       // which sub-equation / quantified instance
  std::string atom;        // the lambda atom (histories or generator label)
  std::string assignment;  // event-value assignment, human-readable
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  std::string condition;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::size_t vacuous_atoms = 0;  // skipped null conditioning events
  std::size_t checked = 0;        // comparisons actually made
  std::vector<std::string> notes;

  void add_witness(Witness w) {
    verdict = Verdict::Fail;
    witnesses.push_back(std::move(w));
  }
  /// Settle pass-vs-vacuous once all comparisons ran.
  void finalize() {
    if (verdict == Verdict::Fail) return;
    verdict = (checked > 0) ? Verdict::Pass : Verdict::Vacuous;
  }
  bool failed() const { return verdict == Verdict::Fail; }
  bool passed() const { return verdict == Verdict::Pass; }
};

}  // namespace bellcheck
