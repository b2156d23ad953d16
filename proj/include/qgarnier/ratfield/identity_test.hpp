#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>

#include "errors.hpp"
#include "rational_function.hpp"

namespace qgarnier {

struct IdentityTestResult {
  bool equal = true;
  int trials = 0;
  int poles_skipped = 0;
  std::optional<ExactPoint> witness;
};

// Draws coordinates uniformly from the integers [2, 10^6].
inline ExactPoint random_point(const std::vector<VarId>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(2, 1000000);
  ExactPoint p;
  for (VarId v : vars) p[v] = BigRational(dist(rng));
  return p;
}

inline IdentityTestResult random_identity_test_detailed(const RationalFunction& f, const RationalFunction& g,
                                                        int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::set<VarId> vs;
  for (VarId v : f.variables()) vs.insert(v);
  for (VarId v : g.variables()) vs.insert(v);
  std::vector<VarId> vars(vs.begin(), vs.end());
  std::mt19937_64 rng(seed);
  IdentityTestResult res;
  const int max_draws = trials * 20;
  int draws = 0;
  while (res.trials < trials && draws < max_draws) {
    ++draws;
    ExactPoint p = random_point(vars, rng);
    auto a = eval_exact(f, p);
    auto b = eval_exact(g, p);
    if (!a || !b) {
      ++res.poles_skipped;
      continue;
    }
    ++res.trials;
    if (*a != *b) {
      res.equal = false;
      res.witness = p;
      return res;
    }
  }
  if (res.trials == 0) throw InconclusiveAllPoles();
  return res;
}

inline bool random_identity_test(const RationalFunction& f, const RationalFunction& g, int trials,
                                 std::uint64_t seed) {
  return random_identity_test_detailed(f, g, trials, seed).equal;
}

}  // namespace qgarnier
