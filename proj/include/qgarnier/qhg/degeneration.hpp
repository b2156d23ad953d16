#pragma once

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "../ratfield/parser.hpp"
#include "../ratfield/rational_function.hpp"
#include "systems.hpp"

namespace qgarnier {

using HighPrecision = boost::multiprecision::mpfr_float;

// Entries in a_i, q and t.
using SymbolicMatrix = std::array<std::array<RationalFunction, 3>, 3>;

struct SymbolicSystem {
  SymbolicMatrix A0;
  SymbolicMatrix A1;
  bool pencil = false;

  SymbolicMatrix at_t() const {
    SymbolicMatrix m;
    RationalFunction t = RationalFunction::variable(var::t);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m[i][j] = A0[i][j] + t * A1[i][j];
        if (pencil) m[i][j] = m[i][j] / (RationalFunction(1) - t);
        m[i][j] = m[i][j].reduced();
      }
    return m;
  }
};

namespace degeneration_detail {

inline SymbolicMatrix matrix(const std::array<std::array<const char*, 3>, 3>& text) {
  SymbolicMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = parse_rational_function(text[i][j]);
  return m;
}

inline bool same(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

template <class T>
T evaluate(const RationalFunction& f, const std::map<VarId, T>& point) {
  std::map<VarId, std::vector<T>> cache;
  T d = detail::evaluate_polynomial<T>(f.denominator(), point, cache);
  if (d == T(0)) throw PoleAtPoint();
  T n = detail::evaluate_polynomial<T>(f.numerator(), point, cache);
  return T(n / d);
}

}  // namespace degeneration_detail

inline SymbolicSystem symbolic_system(HgCase c) {
  using degeneration_detail::matrix;
  switch (c) {
    case HgCase::Q12:
      return {matrix({{{"1", "0", "0"}, {"1-a5", "a0*a5", "0"}, {"1-a5", "a0*a5*(1-a1)", "a0*a1*a2*a5"}}}),
              matrix({{{"-a5", "a0*a5*(1-a1)", "a0*a1*a2*a5*(1-a3)"},
                       {"0", "-a0*a1*a5", "a0*a1*a2*a5*(1-a3)"},
                       {"0", "0", "-a0*a1*a2*a3*a5"}}}),
              true};
    case HgCase::Q11:
      return {matrix({{{"1", "0", "0"}, {"(1-q)*a0", "a0", "0"}, {"(1-q)*a0", "a0*(1-a1)", "a0*a1*a2"}}}),
              matrix({{{"-a0", "-a0*(1-a1)/(1-q)", "-a0*a1*a2*(1-a3)/(1-q)"}, {"0", "0", "0"}, {"0", "0", "0"}}}),
              false};
    case HgCase::Q101:
      return {matrix({{{"1", "0", "0"}, {"(1-q)*a0", "a0", "0"}, {"0", "(1-q)*a0*a1", "a0*a1"}}}),
              matrix({{{"0", "a0*a1/(1-q)", "a0*a1*(1-a2)/(1-q)^2"}, {"0", "0", "0"}, {"0", "0", "0"}}}), false};
    case HgCase::Q102:
      return {matrix({{{"1", "0", "0"}, {"(1-q)*a0", "a0", "0"}, {"(1-q)^2*a0", "(1-q)*a0", "a0*a1"}}}),
              matrix({{{"-a0", "-a0/(1-q)", "-a0*a1*(1-a2)/(1-q)^2"}, {"0", "0", "0"}, {"0", "0", "0"}}}), false};
  }
  throw BadParameters("unknown case");
}

// Source parameters and time as functions of the target ones and eps, and
// x_source = diag(D) x_target.
struct Degeneration {
  HgCase source;
  HgCase target;
  std::vector<RationalFunction> alpha;  // source a_k
  RationalFunction time;                // source t
  std::array<RationalFunction, 3> D;
};

inline Degeneration degeneration(HgCase source, HgCase target) {
  auto f = [](const char* s) { return parse_rational_function(s); };
  if (source == HgCase::Q12 && target == HgCase::Q11)
    return {source, target, {f("eps"), f("a1"), f("a2"), f("a3"), f("a4"), f("a0/eps")}, f("eps*t"),
            {f("1"), f("-1/(eps*(1-q))"), f("-1/(eps*(1-q))")}};
  if (source == HgCase::Q11 && target == HgCase::Q101)
    return {source, target, {f("a0"), f("a1/eps"), f("eps"), f("a2"), f("a3")}, f("eps*t"),
            {f("1"), f("1"), f("-1/(eps*(1-q))")}};
  if (source == HgCase::Q11 && target == HgCase::Q102)
    return {source, target, {f("a0"), f("eps"), f("a1/eps"), f("a2"), f("a3")}, f("t"),
            {f("1"), f("1"), f("1/(1-q)")}};
  throw BadParameters(std::string("no degeneration ") + to_string(source) + " -> " + to_string(target));
}

struct SymbolicLimitReport {
  bool ok = true;
  std::string detail;
};

// D^-1 M_source D under the replacement, entrywise eps -> 0, against M_target.
inline SymbolicLimitReport symbolic_degeneration(const Degeneration& d) {
  Substitution sub;
  for (std::size_t k = 0; k < d.alpha.size(); ++k) sub.emplace(var::alpha(static_cast<int>(k)), d.alpha[k]);
  sub.emplace(var::t, d.time);
  SymbolicMatrix src = symbolic_system(d.source).at_t();
  SymbolicMatrix dst = symbolic_system(d.target).at_t();
  SymbolicLimitReport r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RationalFunction e = (substitute(src[i][j], sub) * d.D[j] / d.D[i]).reduced();
      LimitResult lim = limit_zero(e, var::eps);
      std::string at = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (auto* div = std::get_if<Divergent>(&lim)) {
        r.ok = false;
        r.detail = at + " diverges with eps-valuation " + std::to_string(div->valuation);
        return r;
      }
      const auto& g = std::get<RationalFunction>(lim);
      if (!degeneration_detail::same(g, dst[i][j])) {
        r.ok = false;
        r.detail = at + " tends to " + g.to_string() + ", expected " + dst[i][j].to_string();
        return r;
      }
    }
  return r;
}

struct DegenerationPoint {
  double eps;
  double error;
};

struct NumericDegenerationReport {
  std::vector<DegenerationPoint> table;
  double slope = 0;
};

// Error of the rescaled source solution against the target solution, for
// each eps, and the least-squares slope of log(error) against log(eps).
inline NumericDegenerationReport numeric_degeneration(const Degeneration& d, const std::vector<double>& schedule,
                                                      unsigned precision_bits = 256, double t = 0.05) {
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  using T = HighPrecision;
  if (schedule.size() < 2) throw BadParameters("need at least two eps values");
  unsigned digits = static_cast<unsigned>(precision_bits * 0.30103) + 1;
  T::default_precision(digits);
  double tol = std::pow(10.0, -static_cast<double>(digits) + 5);

  HgParameters<T> target = standard_parameters<T>(d.target);
  T tt(t);
  auto xt = solution(d.target, target, tt, tol);

  NumericDegenerationReport rep;
  for (double e : schedule) {
    std::map<VarId, T> pt{{var::eps, T(e)}, {var::t, tt}, {var::q, target.q}};
    for (std::size_t k = 0; k < target.alpha.size(); ++k) pt[var::alpha(static_cast<int>(k))] = target.alpha[k];
    HgParameters<T> src{{}, target.q};
    for (const auto& a : d.alpha) src.alpha.push_back(degeneration_detail::evaluate(a, pt));
    auto xs = solution(d.source, src, degeneration_detail::evaluate(d.time, pt), tol);
    T worst(0);
    for (int i = 0; i < 3; ++i) {
      T diff = abs(T(xs[i] / degeneration_detail::evaluate(d.D[i], pt) - xt[i]));
      if (diff > worst) worst = diff;
    }
    rep.table.push_back({e, worst.convert_to<double>()});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = static_cast<double>(rep.table.size());
  for (const auto& p : rep.table) {
    double x = std::log(p.eps), y = std::log(p.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

}  // namespace qgarnier
