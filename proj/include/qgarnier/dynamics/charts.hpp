#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/parser.hpp"
#include "../ratfield/rational_function.hpp"

namespace qgarnier {

// The Riccati locus of a representation: some coefficients are fixed to
// functions of the free coefficients and the parameters a_i (variables
// alpha(i)), consistently with the root monomials a_i.
struct RiccatiChart {
  std::string rep;
  int size = 0;
  std::vector<int> free;
  std::map<int, RationalFunction> constraints;
  int parameter_count = 0;
  std::string parameter_constraint;
  // root whose transport under tau_c fixes the time direction, and its ratio as a power of q
  std::string transported_root;
  int transport_power = 0;

  bool is_free(int k) const { return !constraints.count(k); }

  RationalFunction value(int k) const {
    auto it = constraints.find(k);
    return it == constraints.end() ? RationalFunction::variable(var::y(k)) : it->second;
  }

  Substitution substitution() const {
    Substitution s;
    for (const auto& [k, f] : constraints) s.emplace(var::y(k), f);
    return s;
  }

  std::vector<VarId> parameters() const {
    std::vector<VarId> p;
    for (int i = 0; i < parameter_count; ++i) p.push_back(var::alpha(i));
    return p;
  }

  // q as the product of the parameters
  RationalFunction q() const {
    RationalFunction r(1);
    for (VarId v : parameters()) r = r * RationalFunction::variable(v);
    return r;
  }
};

namespace chart_detail {

inline RiccatiChart make(std::string rep, int size, int params,
                         const std::vector<std::pair<int, std::string>>& constraints, std::string note,
                         std::string root, int power) {
  RiccatiChart c{std::move(rep), size, {}, {}, params, std::move(note), std::move(root), power};
  for (const auto& [k, text] : constraints) c.constraints.emplace(k, parse_rational_function(text));
  for (int k = 1; k <= size; ++k)
    if (!c.constraints.count(k)) c.free.push_back(k);
  return c;
}

}  // namespace chart_detail

inline bool has_riccati_chart(std::string_view name) {
  return name == "Q12" || name == "Q11" || name == "Q101" || name == "Q102";
}

inline RiccatiChart riccati_chart(std::string_view name) {
  using chart_detail::make;
  if (name == "Q12")
    return make("Q12", 12, 6,
                {{2, "a0/y1"}, {3, "-1"}, {4, "-a1"}, {6, "a2/y5"}, {7, "-1"}, {8, "-a3"},
                 {10, "a4/y9"}, {11, "-1"}, {12, "-a5"}},
                "bp0 = b0/(a1 a3 a5)", "b0", -1);
  if (name == "Q11")
    return make("Q11", 11, 5,
                {{2, "-a0/y1"}, {3, "-1"}, {4, "-a1"}, {6, "a2/y5"}, {7, "-1"}, {8, "-a3"}, {10, "a4/y9"},
                 {11, "-1"}},
                "", "b0", -1);
  if (name == "Q101")
    return make("Q101", 10, 4,
                {{2, "-a0/y1"}, {3, "-1"}, {4, "-1"}, {6, "-a1/y5"}, {7, "-1"}, {8, "-a2"}, {10, "a3/y9"}}, "",
                "b0", -1);
  if (name == "Q102")
    return make("Q102", 10, 4,
                {{2, "-a0/y1"}, {3, "-1"}, {4, "-a1/y5"}, {6, "-1"}, {7, "-1"}, {8, "-a2"}, {10, "a3/y9"}}, "",
                "g1", 2);
  throw UnknownName(std::string(name) + " has no Riccati chart");
}

}  // namespace qgarnier
