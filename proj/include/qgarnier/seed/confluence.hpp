#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/rational_function.hpp"
#include "seed.hpp"

namespace qgarnier {

using SeedLimit = std::variant<Seed<RationalFunction>, Divergent>;

// Substitution y_i -> eps^-1 y_j, y_j -> eps.
inline Substitution confluence_substitution(int i, int j) {
  Substitution s;
  s.emplace(var::y(i), RationalFunction::monomial(Monomial::from_factors({{var::y(j), 1}, {var::eps, -1}})));
  s.emplace(var::y(j), RationalFunction::variable(var::eps));
  return s;
}

// Takes coefficients already written in eps and performs the limit: slot j
// receives the limit of c_i c_j, every other survivor the limit of its own
// coefficient, then slot i is dropped and survivors move to their new labels.
inline std::variant<std::vector<RationalFunction>, Divergent> confluence_limit(
    const std::vector<RationalFunction>& c, int i, int j, const ConfluenceLabels& labels) {
  const int n = static_cast<int>(c.size());
  std::vector<RationalFunction> out(n - 1);
  for (int v : surviving_vertices(n, i)) {
    RationalFunction f = v == j ? multiply_reduced(c[i - 1], c[j - 1]) : c[v - 1].reduced();
    LimitResult lim = limit_zero(f, var::eps);
    if (auto* d = std::get_if<Divergent>(&lim)) return *d;
    out[labels(v) - 1] = std::get<RationalFunction>(lim);
  }
  return out;
}

// Pushes one function of y_1..y_n through the confluence: substitute, take
// eps -> 0, rename survivors.
inline LimitResult confluence_function(const RationalFunction& f, int n, int i, int j, const VertexMap& relabel) {
  ConfluenceLabels labels(n, i, relabel);
  LimitResult lim = limit_zero(substitute(f, confluence_substitution(i, j)).reduced(), var::eps);
  if (is_divergent(lim)) return lim;
  Substitution rename;
  for (int v : surviving_vertices(n, i))
    if (labels(v) != v) rename.emplace(var::y(v), RationalFunction::variable(var::y(labels(v))));
  const auto& g = std::get<RationalFunction>(lim);
  return rename.empty() ? g : substitute(g, rename).reduced();
}

// Confluence of a symbolic seed whose coefficients are functions of y_1..y_n:
// substitute, take eps -> 0, and rename the surviving variables.
inline SeedLimit confluence_seed(const Seed<RationalFunction>& s, int i, int j,
                                 const std::optional<VertexMap>& relabel = std::nullopt) {
  const int n = s.size();
  VertexMap map = relabel ? *relabel : default_confluence_relabel(n, i);
  Quiver q = confluence_matrix(s.quiver, i, j, map);
  ConfluenceLabels labels(n, i, map);
  Substitution sub = confluence_substitution(i, j);
  std::vector<RationalFunction> c;
  c.reserve(n);
  for (const auto& f : s.coeffs) c.push_back(substitute(f, sub).reduced());
  auto lim = confluence_limit(c, i, j, labels);
  if (auto* d = std::get_if<Divergent>(&lim)) return *d;
  Substitution rename;
  for (int v : surviving_vertices(n, i))
    if (labels(v) != v) rename.emplace(var::y(v), RationalFunction::variable(var::y(labels(v))));
  Seed<RationalFunction> out{q, {}};
  for (auto& f : std::get<std::vector<RationalFunction>>(lim))
    out.coeffs.push_back(rename.empty() ? f : substitute(f, rename).reduced());
  return out;
}

}  // namespace qgarnier
