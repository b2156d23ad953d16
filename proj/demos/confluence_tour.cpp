// Walks the confluences from Q12 down to the five degenerate quivers and
// reports what happens to each translation and generator of the parent.
#include <iostream>

#include "qgarnier/weylrep.hpp"

using namespace qgarnier;

int main() {
  for (const auto& name : catalog_names()) {
    if (name == "Q12") continue;
    ConfluenceSpec c = confluence_origin(name);
    const Representation& src = catalog(c.source);
    std::cout << c.source << " --(" << c.i << "->" << c.j << ")--> " << name << "  ("
              << catalog_quiver(name).size() << " vertices)\n";
    for (const auto& g : src.generator_order) {
      auto seed = apply_word(initial_seed<RationalFunction>(src.quiver), src.word(g));
      SeedLimit lim = confluence_seed(seed, c.i, c.j, c.relabel);
      bool stays = !std::holds_alternative<Divergent>(lim) &&
                   std::get<Seed<RationalFunction>>(lim).quiver == catalog_quiver(name);
      std::cout << "  " << g << ": "
                << (std::holds_alternative<Divergent>(lim) ? "divergent" : stays ? "limit exists" : "quiver changes")
                << "\n";
    }
  }
}
