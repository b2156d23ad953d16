// Prints one PASS/FAIL line per acceptance criterion. With --json the full
// report follows. Exit status is 0 only when every criterion passes.
#include <cstring>
#include <iostream>

#include "qgarnier/suite.hpp"

using namespace qgarnier;

int main(int argc, char** argv) {
  bool json = argc > 1 && std::strcmp(argv[1], "--json") == 0;
  SuiteOptions opts;
  auto results = run_suite(opts);
  bool ok = true;
  for (const auto& c : results) {
    ok = ok && c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << c.checks.size()
              << " checks)\n";
    if (!c.ok())
      for (const auto& r : c.checks)
        if (!r.ok()) std::cout << "    " << to_json(r).dump() << "\n";
  }
  if (json) std::cout << to_json(results).dump(2) << "\n";
  return ok ? 0 : 1;
}
