// Decide E-continuity and the Hausdorff property for the chain with a
// symmetry, then look at the module that degenerates there.
#include <iostream>

#include "egroupoid/groupoid.hpp"
#include "egroupoid/l2_module.hpp"

int main() {
  using namespace egroupoid;

  ChainFamily const G(true);
  auto const        S = ChainElement::symmetry();

  auto const v = e_continuity_verdict(G, S, 20);
  std::cout << "S: " << to_string(v.kind) << " at " << G.name(v.witness->e) << "\n";

  auto const h = hausdorff_verdict(G, 20);
  std::cout << "groupoid: " << to_string(h.kind) << "\n";

  auto const& [a, b] = *h.evidence_pair;
  std::cout << "direct check: "
            << to_string(direct_separation_check(G, a, b, 20).kind) << "\n";

  for (auto const& step : degeneration_report(G, 20).steps) {
    std::cout << (step.verified ? "  ok  " : "  --  ") << step.claim << "\n";
  }
}
