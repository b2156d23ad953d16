#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "../ratfield/errors.hpp"
#include "../ratfield/rational_function.hpp"
#include "../weylrep/catalog.hpp"
#include "riccati.hpp"

namespace qgarnier {

// A numeric starting point: values of the free coefficients and of the
// parameters a_i.
struct OrbitStart {
  std::map<int, std::complex<double>> free;
  std::vector<std::complex<double>> alpha;
};

struct Orbit {
  std::vector<int> free;  // column order of points
  std::vector<std::vector<std::complex<double>>> points;
  double max_alpha_drift = 0;  // relative, over all steps
};

class ParameterDrift : public std::runtime_error {
 public:
  explicit ParameterDrift(const std::string& what) : std::runtime_error(what) {}
};

namespace orbit_detail {

inline NumericPoint point_of(const OrbitStart& s) {
  NumericPoint p;
  for (const auto& [k, v] : s.free) p[var::y(k)] = v;
  for (std::size_t i = 0; i < s.alpha.size(); ++i) p[var::alpha(static_cast<int>(i))] = s.alpha[i];
  return p;
}

// Largest relative deviation of the root monomials a_i, evaluated on the full
// chart coefficients, from the parameter values.
inline double alpha_drift(const Representation& rep, const RiccatiChart& chart, const NumericPoint& p) {
  NumericPoint full = p;
  for (const auto& [k, c] : chart.constraints) full[var::y(k)] = eval_numeric(c, p);
  double worst = 0;
  for (int i = 0; i < chart.parameter_count; ++i) {
    std::complex<double> a = eval_numeric(rep.root("a" + std::to_string(i)).to_rational_function(), full);
    std::complex<double> want = p.at(var::alpha(i));
    worst = std::max(worst, std::abs(a - want) / std::max(1.0, std::abs(want)));
  }
  return worst;
}

}  // namespace orbit_detail

// Iterates the map numerically. Throws PoleAtPoint when a step hits a pole
// and ParameterDrift when the parameters stop being reproduced within tol.
inline Orbit iterate_numeric(const BirationalMap& map, const OrbitStart& start, int steps, double tol = 1e-9) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (static_cast<int>(start.alpha.size()) != map.chart.parameter_count)
    throw std::invalid_argument(map.chart.rep + " needs " + std::to_string(map.chart.parameter_count) +
                                " parameters");
  for (int k : map.chart.free)
    if (!start.free.count(k)) throw std::invalid_argument("missing start value for y" + std::to_string(k));
  const Representation& rep = catalog(map.chart.rep);
  Orbit o{map.chart.free, {}, 0};
  NumericPoint p = orbit_detail::point_of(start);
  auto record = [&](int step) {
    std::vector<std::complex<double>> row;
    for (int k : o.free) row.push_back(p.at(var::y(k)));
    o.points.push_back(std::move(row));
    double d = orbit_detail::alpha_drift(rep, map.chart, p);
    o.max_alpha_drift = std::max(o.max_alpha_drift, d);
    if (d > tol) throw ParameterDrift("parameters drift by " + std::to_string(d) + " at step " + std::to_string(step));
  };
  record(0);
  for (int n = 1; n <= steps; ++n) {
    NumericPoint next = p;
    for (const auto& [k, f] : map.images) {
      try {
        next[var::y(k)] = eval_numeric(f, p);
      } catch (const PoleAtPoint&) {
        throw PoleAtPoint("pole of tau_c(y" + std::to_string(k) + ") at step " + std::to_string(n));
      }
    }
    p = std::move(next);
    record(n);
  }
  return o;
}

}  // namespace qgarnier
