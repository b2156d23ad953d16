// Derives tau_c on the Q12 chart, starts at the hypergeometric solution and
// checks that the orbit follows the solution at t, t/q, t/q^2, ...
#include <cstdio>

#include "qgarnier/dynamics.hpp"
#include "qgarnier/qhg.hpp"

using namespace qgarnier;

int main() {
  const BirationalMap& map = riccati_map("Q12");
  std::printf("%s\n", map.to_string().c_str());

  auto p = standard_parameters(HgCase::Q12);
  double t = 0.01;
  OrbitStart start;
  for (double a : p.alpha) start.alpha.emplace_back(a);
  auto y0 = riccati_values(HgCase::Q12, p, solution(HgCase::Q12, p, t), t);
  for (int k : map.chart.free) start.free[k] = y0.at(k);

  Orbit orbit = iterate_numeric(map, start, 4);
  for (std::size_t n = 0; n < orbit.points.size(); ++n) {
    auto y = riccati_values(HgCase::Q12, p, solution(HgCase::Q12, p, t), t);
    double worst = 0;
    for (std::size_t c = 0; c < orbit.free.size(); ++c)
      worst = std::max(worst, std::abs(orbit.points[n][c] - y.at(orbit.free[c])));
    std::printf("t = %-10.6g y1 = %-12.6g y5 = %-12.6g y9 = %-12.6g |orbit - solution| = %.2e\n", t,
                orbit.points[n][0].real(), orbit.points[n][1].real(), orbit.points[n][2].real(), worst);
    t /= p.q;
  }
}
