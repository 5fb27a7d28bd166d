// Build a three-point common-cause model, check Bell locality, and print
// the CHSH value of the behavior it induces.

#include <iostream>

#include "bellcheck/bellcheck.hpp"

int main() {
  using namespace bellcheck;

  GalleryModel gm = deterministic_common_cause();
  const Model& m = gm.model;

  const CheckReport axioms = check_localised_axioms(m);
  std::cout << check_to_text(axioms);

  const CheckReport bell =
      check_bell_locality(m, gm.scenario->wing_a, gm.scenario->wing_b, gm.scenario->past);
  std::cout << check_to_text(bell);

  const BehaviorTable table = behavior_from_model(m, *gm.scenario);
  const ChshResult chsh = chsh_value(table);
  std::cout << "CHSH = " << to_string(chsh.value) << "\n";

  const LhvResult lhv = lhv_membership(table);
  std::cout << "local model: " << (lhv.member() ? "yes" : "no") << "\n";
  return bell.failed() ? 1 : 0;
}
