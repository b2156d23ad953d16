#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "../ratfield/errors.hpp"
#include "../ratfield/parser.hpp"
#include "../ratfield/rational_function.hpp"
#include "../seed/automorphism.hpp"
#include "../seed/seed.hpp"
#include "../weylrep/catalog.hpp"
#include "../weylrep/representation.hpp"
#include "../weylrep/verify.hpp"
#include "charts.hpp"

namespace qgarnier {

class ConstraintNotInvariant : public std::runtime_error {
 public:
  explicit ConstraintNotInvariant(const std::string& what) : std::runtime_error(what) {}
};

// tau_c restricted to a Riccati chart: images of the free coefficients, as
// functions of the free coefficients and the parameters.
struct BirationalMap {
  RiccatiChart chart;
  std::map<int, RationalFunction> images;

  const RationalFunction& image(int k) const {
    auto it = images.find(k);
    if (it == images.end()) throw std::out_of_range("y" + std::to_string(k) + " is not a free coefficient");
    return it->second;
  }

  Substitution substitution() const {
    Substitution s;
    for (const auto& [k, f] : images) s.emplace(var::y(k), f);
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [k, f] : images) s += "y" + std::to_string(k) + " -> " + f.reduced().to_string() + "\n";
    return s;
  }
};

inline Automorphism tau_c_map(std::string_view name) {
  const Representation& rep = catalog(name);
  if (!rep.has_translation("tau_c")) throw NoTranslation(rep.name + " has no translation tau_c");
  return automorphism_of(rep, "tau_c");
}

namespace riccati_detail {

inline bool same(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

// Images of every coefficient under tau_c on the chart. Running the word on
// the specialized seed is cheapest; when a coefficient vanishes midway (a
// specialized y = -1 being mutated) fall back to the full automorphism.
inline std::vector<RationalFunction> chart_images(const Representation& rep, const RiccatiChart& chart) {
  Word w = rep.word("tau_c");
  Seed<RationalFunction> s{rep.quiver, {}};
  for (int k = 1; k <= chart.size; ++k) s.coeffs.push_back(chart.value(k));
  std::vector<RationalFunction> out;
  try {
    s = apply_word(s, w);
    if (s.quiver != rep.quiver) throw QuiverNotPreserved("tau_c");
    for (auto& c : s.coeffs) out.push_back(c.reduced());
  } catch (const DivisionByZero&) {
    out.clear();
    Automorphism a = compile(w, rep.quiver);
    Substitution sub = chart.substitution();
    for (const auto& img : a.images) out.push_back(substitute(img, sub).reduced());
  }
  return out;
}

}  // namespace riccati_detail

// Throws ConstraintNotInvariant unless every constrained coefficient maps to
// its constraint evaluated at the images of the free ones.
inline BirationalMap derive_riccati_map(std::string_view name) {
  const Representation& rep = catalog(name);
  if (!rep.has_translation("tau_c")) throw NoTranslation(rep.name + " has no translation tau_c");
  RiccatiChart chart = riccati_chart(name);
  auto all = riccati_detail::chart_images(rep, chart);
  BirationalMap m{chart, {}};
  for (int k : chart.free) m.images.emplace(k, all[k - 1]);
  Substitution sub = m.substitution();
  for (const auto& [k, c] : chart.constraints) {
    RationalFunction expected = substitute(c, sub).reduced();
    if (!riccati_detail::same(all[k - 1], expected))
      throw ConstraintNotInvariant(rep.name + ": tau_c(y" + std::to_string(k) + ") = " + all[k - 1].to_string() +
                                   " leaves the chart, expected " + expected.to_string());
  }
  return m;
}

// Cached per representation; the derivation is deterministic.
inline const BirationalMap& riccati_map(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, BirationalMap> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(std::string(name));
  if (it == cache.end()) it = cache.emplace(std::string(name), derive_riccati_map(name)).first;
  return it->second;
}

// Root monomials a_i evaluated on the chart must reduce to the parameters.
inline CheckResult check_chart_consistency(const std::string& name) {
  return verify_detail::timed({name + ".chart.roots", "chart", "exact"}, [&](CheckResult& r) {
    const Representation& rep = catalog(name);
    RiccatiChart chart = riccati_chart(name);
    Substitution sub = chart.substitution();
    for (int i = 0; i < chart.parameter_count; ++i) {
      std::string a = "a" + std::to_string(i);
      RationalFunction v = substitute(rep.root(a).to_rational_function(), sub).reduced();
      if (!riccati_detail::same(v, RationalFunction::variable(var::alpha(i)))) {
        r.status = CheckStatus::Fail;
        r.detail = a + " = " + v.to_string() + " on the chart";
        return;
      }
    }
    if (!riccati_detail::same(substitute(rep.root("q").to_rational_function(), sub), chart.q())) {
      r.status = CheckStatus::Fail;
      r.detail = "q is not the product of the parameters on the chart";
    }
  });
}

inline CheckResult check_chart_invariance(const std::string& name) {
  return verify_detail::timed({name + ".chart.invariance", "chart", "exact"}, [&](CheckResult& r) {
    try {
      auto m = derive_riccati_map(name);
      r.detail = std::to_string(m.chart.constraints.size()) + " constrained coefficients preserved";
    } catch (const ConstraintNotInvariant& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
  });
}

// The transported root picks up the expected power of q under tau_c on the chart.
inline CheckResult check_parameter_transport(const std::string& name) {
  RiccatiChart chart = riccati_chart(name);
  return verify_detail::timed({name + ".chart.transport." + chart.transported_root, "chart", "exact"},
                              [&](CheckResult& r) {
                                const Representation& rep = catalog(name);
                                const BirationalMap& m = riccati_map(name);
                                RationalFunction root =
                                    substitute(rep.root(chart.transported_root).to_rational_function(),
                                               chart.substitution())
                                        .reduced();
                                RationalFunction moved = substitute(root, m.substitution()).reduced();
                                RationalFunction expected = (chart.q().pow(chart.transport_power) * root).reduced();
                                if (!riccati_detail::same(moved, expected)) {
                                  r.status = CheckStatus::Fail;
                                  r.detail = "tau_c(" + chart.transported_root + ") = " + moved.to_string();
                                }
                              });
}

// The displayed q-Riccati system on the Q12 chart.
inline std::map<int, RationalFunction> golden_q12_riccati() {
  auto P = parse_rational_function("y1*y5*y9 + a0*(1-a1)*y5*y9 - a0*a1*a2*(1-a3)*y9 + a0*a1*a2*a3*a4");
  auto Q = parse_rational_function("y1*y5*y9 + a2*(1-a3)*y1*y9 - a2*a3*a4*(1-a5)*y1 + a0*a2*a3*a4*a5");
  auto R = parse_rational_function("y1*y5*y9 + a4*(1-a5)*y1*y5 - a0*a4*a5*(1-a1)*y5 + a0*a1*a2*a4*a5");
  auto v = [](const char* s) { return parse_rational_function(s); };
  return {{1, (v("y1") * P / (v("a0*a1") * Q)).reduced()},
          {5, (v("y5") * Q / (v("a2*a3") * R)).reduced()},
          {9, (v("y9") * R / (v("a4*a5") * P)).reduced()}};
}

inline CheckResult check_q12_riccati_golden() {
  return verify_detail::timed({"Q12.riccati.golden", "golden", "exact"}, [](CheckResult& r) {
    const BirationalMap& m = riccati_map("Q12");
    for (const auto& [k, g] : golden_q12_riccati()) {
      if (!riccati_detail::same(m.image(k), g)) {
        r.status = CheckStatus::Fail;
        r.detail = "tau_c(y" + std::to_string(k) + ") = " + m.image(k).to_string();
        return;
      }
    }
  });
}

inline std::vector<CheckResult> verify_dynamics(const std::string& name) {
  std::vector<CheckResult> out{check_chart_consistency(name), check_chart_invariance(name),
                               check_parameter_transport(name)};
  if (name == "Q12") out.push_back(check_q12_riccati_golden());
  return out;
}

}  // namespace qgarnier
