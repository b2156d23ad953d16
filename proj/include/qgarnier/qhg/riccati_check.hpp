#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>

#include "../dynamics/riccati.hpp"
#include "../ratfield/rational_function.hpp"
#include "systems.hpp"

namespace qgarnier {

struct RiccatiSolutionReport {
  double residual = 0;        // |tau_c(y)(t) - y(t/q)| over the free coefficients, relative
  double chart_residual = 0;  // solution values against the chart constraints
  double gamma_residual = 0;  // Q102 only: printed gamma_1 against a0^2 a1 a3/(q^2 t^2)
  double printed_residual = 0;  // the residual with the printed coefficients, for reference
};

namespace riccati_check_detail {

inline double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace riccati_check_detail

// Builds y from x(t), pushes it through the derived Riccati map and compares
// with y built from x(t/q), since tau_c moves the time variable to t/q.
inline RiccatiSolutionReport verify_riccati_solution(HgCase c, const HgParameters<double>& p, double t,
                                                     double tol = 1e-16) {
  using riccati_check_detail::rel;
  const BirationalMap& map = riccati_map(to_string(c));
  auto x = solution(c, p, t, tol), xs = solution(c, p, t / p.q, tol);
  auto now = riccati_values(c, p, x, t);
  auto next = riccati_values(c, p, xs, t / p.q);

  NumericPoint pt;
  for (std::size_t i = 0; i < p.alpha.size(); ++i) pt[var::alpha(static_cast<int>(i))] = p.alpha[i];
  for (int k : map.chart.free) pt[var::y(k)] = now.at(k);

  RiccatiSolutionReport r;
  for (const auto& [k, f] : map.images) r.residual = std::max(r.residual, rel(eval_numeric(f, pt), next.at(k)));
  for (const auto& [k, f] : map.chart.constraints)
    r.chart_residual = std::max(r.chart_residual, rel(eval_numeric(f, pt), now.at(k)));
  auto printed = proposition_values(c, p, x, t), printed_next = proposition_values(c, p, xs, t / p.q);
  NumericPoint pp = pt;
  for (int k : map.chart.free) pp[var::y(k)] = printed.at(k);
  for (const auto& [k, f] : map.images) {
    try {
      r.printed_residual = std::max(r.printed_residual, rel(eval_numeric(f, pp), printed_next.at(k)));
    } catch (const PoleAtPoint&) {
      r.printed_residual = std::numeric_limits<double>::infinity();
    }
  }
  if (c == HgCase::Q102) {
    const auto& y = printed;
    double g1 = y.at(2) * y.at(2) * y.at(3) * y.at(4) * y.at(10) / (y.at(5) * y.at(9));
    const auto& a = p.alpha;
    r.gamma_residual = rel(g1, a[0] * a[0] * a[1] * a[3] / (p.q * p.q * t * t));
  }
  return r;
}

}  // namespace qgarnier
