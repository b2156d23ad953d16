#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "qhg.hpp"
#include "quiver.hpp"
#include "seed.hpp"
#include "weylrep.hpp"

namespace qgarnier {

struct SuiteOptions {
  VerifyOptions verify;
  unsigned precision_bits = 256;
  double linear_tolerance = 1e-9;
  double riccati_tolerance = 1e-8;
  double slope_window = 0.15;
  std::vector<double> eps_schedule{1e-2, 1e-3, 1e-4, 1e-5};
  int involution_quivers = 200;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool ok() const { return all_ok(checks); }
};

inline nlohmann::json to_json(const CriterionResult& c, bool with_time = false) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : c.checks) checks.push_back(to_json(r, with_time));
  return {{"criterion", c.number}, {"title", c.title}, {"ok", c.ok()}, {"checks", checks}};
}

inline nlohmann::json to_json(const std::vector<CriterionResult>& cs, bool with_time = false) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cs) j.push_back(to_json(c, with_time));
  return j;
}

namespace suite_detail {

inline void append(std::vector<CheckResult>& out, const std::vector<CheckResult>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// n in [2, 8], entries in [-3, 3], one random vertex per quiver
inline CheckResult mutation_involution(const SuiteOptions& o) {
  return verify_detail::timed({"mutation:involution", "mutation", "exact"}, [&](CheckResult& r) {
    std::mt19937_64 rng(claim_seed(o.verify.seed, "mutation:involution"));
    std::uniform_int_distribution<int> size(2, 8), entry(-3, 3);
    for (int k = 0; k < o.involution_quivers; ++k) {
      int n = size(rng);
      Quiver q(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          int e = entry(rng);
          q.at(i, j) = e;
          q.at(j, i) = -e;
        }
      int v = std::uniform_int_distribution<int>(1, n)(rng);
      auto s = initial_seed<RationalFunction>(q);
      if (!seeds_equal(mutate(mutate(s, v), v), s)) {
        r.status = CheckStatus::Fail;
        r.witness = quiver_to_json(q).dump() + " at vertex " + std::to_string(v);
        return;
      }
    }
    r.detail = std::to_string(o.involution_quivers) + " quivers";
  });
}

inline CheckResult figure_one_confluence() {
  return verify_detail::timed({"confluence:4->1", "confluence", "exact"}, [](CheckResult& r) {
    Quiver q = Quiver::from_matrix({{0, -1, -1, 1}, {1, 0, -1, 1}, {1, 1, 0, -1}, {-1, -1, 1, 0}});
    Quiver want = Quiver::from_matrix({{0, -2, 0}, {2, 0, -1}, {0, 1, 0}});
    if (confluence_matrix(q, 4, 1) != want) {
      r.status = CheckStatus::Fail;
      r.detail = "matrix";
      return;
    }
    auto y = [](int k) { return RationalFunction::variable(var::y(k)); };
    std::vector<RationalFunction> from{y(1) * y(4), y(2), y(3)};
    for (int k = 0; k < 3; ++k) {
      LimitResult l = confluence_function(from[k], 4, 4, 1, VertexMap{});
      if (is_divergent(l) || !(std::get<RationalFunction>(l) == y(k + 1))) {
        r.status = CheckStatus::Fail;
        r.detail = "coefficient " + std::to_string(k + 1);
        return;
      }
    }
    SeedLimit s = confluence_seed(initial_seed<RationalFunction>(q), 4, 1);
    auto* seed = std::get_if<Seed<RationalFunction>>(&s);
    if (!seed || !seeds_equal(*seed, initial_seed<RationalFunction>(want))) {
      r.status = CheckStatus::Fail;
      r.detail = "seed";
    }
  });
}

inline CheckResult no_translation(const std::string& name) {
  return verify_detail::timed({name + ":tau_c:absent", "translation", "exact"}, [&](CheckResult& r) {
    try {
      tau_c_map(name);
      r.status = CheckStatus::Fail;
      r.detail = "tau_c unexpectedly defined";
    } catch (const NoTranslation&) {
    }
  });
}

inline CheckResult hypergeometric(HgCase c, double t, const SuiteOptions& o) {
  std::string id = std::string(to_string(c)) + ":hypergeometric:t=" + sci(t);
  return verify_detail::timed({id, "hypergeometric", "numeric"}, [&](CheckResult& r) {
    auto p = standard_parameters(c);
    double lin = verify_linear(c, p, t);
    auto ric = verify_riccati_solution(c, p, t);
    r.detail = "linear " + sci(lin) + ", riccati " + sci(ric.residual) + ", chart " + sci(ric.chart_residual);
    bool ok = lin < o.linear_tolerance && ric.residual < o.riccati_tolerance && ric.chart_residual < o.riccati_tolerance;
    if (c == HgCase::Q102) {
      r.detail += ", gamma1 " + sci(ric.gamma_residual);
      ok = ok && ric.gamma_residual < o.riccati_tolerance;
    }
    if (!ok) r.status = CheckStatus::Fail;
  });
}

inline std::vector<CheckResult> degeneration_checks(HgCase s, HgCase t, const SuiteOptions& o) {
  std::string id = std::string(to_string(s)) + "->" + to_string(t) + ":degeneration";
  Degeneration d = degeneration(s, t);
  return {verify_detail::timed({id + ":symbolic", "degeneration", "exact"},
                               [&](CheckResult& r) {
                                 auto rep = symbolic_degeneration(d);
                                 if (!rep.ok) {
                                   r.status = CheckStatus::Fail;
                                   r.detail = rep.detail;
                                 }
                               }),
          verify_detail::timed({id + ":slope", "degeneration", "numeric"}, [&](CheckResult& r) {
            auto rep = numeric_degeneration(d, o.eps_schedule, o.precision_bits);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.4f", rep.slope);
            r.detail = std::string("slope ") + buf;
            if (std::abs(rep.slope - 1.0) > o.slope_window) r.status = CheckStatus::Fail;
          })};
}

inline std::vector<CheckResult> reductions_except(const std::string& target, bool divergent, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (const auto& c : reduction_claims(target))
    if (c.expect_divergent == divergent) out.push_back(verify_reduction(c, o));
  return out;
}

inline CheckResult golden(const std::string& name, const std::string& id) {
  for (auto& r : verify_goldens(name))
    if (r.id == id) return r;
  return {id, "golden", "exact", CheckStatus::Error, "no such golden"};
}

}  // namespace suite_detail

using SuiteCriterion = std::function<std::vector<CheckResult>(const SuiteOptions&)>;

// Criteria 1..10 in order.
inline const std::vector<std::pair<std::string, SuiteCriterion>>& suite_criteria() {
  using namespace suite_detail;
  static const std::vector<std::pair<std::string, SuiteCriterion>> c{
      {"mutation involution",
       [](const SuiteOptions& o) { return std::vector<CheckResult>{mutation_involution(o)}; }},
      {"figure 1 confluence 4->1", [](const SuiteOptions&) { return std::vector<CheckResult>{figure_one_confluence()}; }},
      {"Q12 relations",
       [](const SuiteOptions& o) {
         VerifyOptions v = o.verify;
         v.mode = CheckMode::Randomized;
         return verify_relations(catalog("Q12"), v);
       }},
      {"Q12 action tables and tau_c decomposition",
       [](const SuiteOptions& o) {
         const Representation& rep = catalog("Q12");
         VerifyOptions v = o.verify;
         v.mode = CheckMode::Randomized;
         auto out = verify_action_table(rep);
         append(out, verify_root_identities(rep));
         append(out, verify_decompositions(rep, v));
         for (const char* id : {"Q12:golden:r_i(y)", "Q12:golden:pi1(y)", "Q12:golden:pi2(y)", "Q12:golden:pi3(y)",
                                "Q12:golden:mu1", "Q12:compare:s closed forms"})
           out.push_back(golden("Q12", id));
         return out;
       }},
      {"Q12 Riccati system and chart invariance",
       [](const SuiteOptions&) {
         std::vector<CheckResult> out;
         for (const char* n : {"Q12", "Q11", "Q101", "Q102"}) append(out, verify_dynamics(n));
         return out;
       }},
      {"Q12 -> Q11 reductions",
       [](const SuiteOptions& o) {
         auto out = reductions_except("Q11", false, o.verify);
         out.push_back(golden("Q12", "Q12:golden:r0 r5 r0"));
         out.push_back(golden("Q11", "Q11:golden:r0(y)"));
         return out;
       }},
      {"Q11 -> Q101..Q105 reductions and Q105 relations",
       [](const SuiteOptions& o) {
         std::vector<CheckResult> out;
         for (const char* t : {"Q101", "Q102", "Q103", "Q104", "Q105"}) append(out, reductions_except(t, false, o.verify));
         VerifyOptions v = o.verify;
         v.mode = CheckMode::Randomized;
         append(out, verify_relations(catalog("Q105"), v));
         return out;
       }},
      {"tau_c diverges under 5->8; Q103 pi1^4",
       [](const SuiteOptions& o) {
         auto out = reductions_except("Q103", true, o.verify);
         out.push_back(check_q103_pi1_fourth(o.verify));
         out.push_back(no_translation("Q103"));
         out.push_back(no_translation("Q105"));
         return out;
       }},
      {"hypergeometric residuals",
       [](const SuiteOptions& o) {
         std::vector<CheckResult> out;
         for (HgCase c : all_cases())
           for (double t : standard_times()) out.push_back(hypergeometric(c, t, o));
         return out;
       }},
      {"degeneration limits",
       [](const SuiteOptions& o) {
         std::vector<CheckResult> out;
         append(out, degeneration_checks(HgCase::Q12, HgCase::Q11, o));
         append(out, degeneration_checks(HgCase::Q11, HgCase::Q101, o));
         append(out, degeneration_checks(HgCase::Q11, HgCase::Q102, o));
         return out;
       }},
  };
  return c;
}

inline CriterionResult run_criterion(int number, const SuiteOptions& o) {
  const auto& all = suite_criteria();
  if (number < 1 || number > static_cast<int>(all.size())) throw std::out_of_range("no criterion " + std::to_string(number));
  const auto& [title, run] = all[number - 1];
  return {number, title, run(o)};
}

inline std::vector<CriterionResult> run_criteria(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= static_cast<int>(suite_criteria().size()); ++k) out.push_back(run_criterion(k, o));
  return out;
}

// Criterion 11: a second run with the same options gives the same report.
inline CriterionResult determinism(const std::vector<CriterionResult>& first, const SuiteOptions& o) {
  CriterionResult c{static_cast<int>(suite_criteria().size()) + 1, "determinism", {}};
  c.checks.push_back(verify_detail::timed({"suite:rerun", "determinism", "exact"}, [&](CheckResult& r) {
    std::string a = to_json(first).dump(), b = to_json(run_criteria(o)).dump();
    if (a != b) {
      r.status = CheckStatus::Fail;
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      r.detail = "reports differ at byte " + std::to_string(k);
    }
  }));
  return c;
}

inline std::vector<CriterionResult> run_suite(const SuiteOptions& o) {
  auto out = run_criteria(o);
  out.push_back(determinism(out, o));
  return out;
}

}  // namespace qgarnier
