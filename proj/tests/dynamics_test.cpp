#include <gtest/gtest.h>

#include "qgarnier/dynamics.hpp"

using namespace qgarnier;

namespace {

RationalFunction P(const char* s) { return parse_rational_function(s); }

OrbitStart generic_start(const BirationalMap& m) {
  OrbitStart s;
  double v = 0.37;
  for (int k : m.chart.free) s.free[k] = v += 0.41;
  for (int i = 0; i < m.chart.parameter_count; ++i) s.alpha.emplace_back(0.55 + 0.1 * i);
  return s;
}

}  // namespace

TEST(TauC, FixesParameters) {
  for (const char* n : {"Q12", "Q11", "Q101"}) {
    const Representation& rep = catalog(n);
    for (int i = 0; rep.has_root("a" + std::to_string(i)); ++i) {
      RationalFunction a = rep.root("a" + std::to_string(i)).to_rational_function();
      EXPECT_EQ(act_on_expr(rep, "tau_c", a), a) << n << " a" << i;
    }
  }
  const Representation& q11 = catalog("Q11");
  RationalFunction g = q11.root("g").to_rational_function(), q = q11.root("q").to_rational_function();
  EXPECT_EQ(act_on_expr(q11, "tau_c", g), g * q.pow(5));
  EXPECT_THROW(tau_c_map("Q105"), NoTranslation);
  EXPECT_THROW(tau_c_map("Q103"), NoTranslation);
}

TEST(Riccati, Q12MatchesDisplayedSystem) {
  const BirationalMap& m = riccati_map("Q12");
  EXPECT_EQ(m.image(1), P("y1*(y1*y5*y9 + a0*(1-a1)*y5*y9 - a0*a1*a2*(1-a3)*y9 + a0*a1*a2*a3*a4)"
                          "/(a0*a1*(y1*y5*y9 + a2*(1-a3)*y1*y9 - a2*a3*a4*(1-a5)*y1 + a0*a2*a3*a4*a5))"));
  EXPECT_TRUE(check_q12_riccati_golden().ok());
  EXPECT_EQ(m.images.size(), m.chart.free.size());
}

TEST(Riccati, ChartsAreInvariant) {
  for (const char* n : {"Q12", "Q11", "Q101", "Q102"})
    for (const auto& r : verify_dynamics(n)) EXPECT_TRUE(r.ok()) << to_json(r).dump();
  EXPECT_EQ(riccati_chart("Q12").value(3), RationalFunction(-1));
  EXPECT_THROW(riccati_chart("Q104"), UnknownName);
}

TEST(Riccati, TextForm) {
  std::string s = riccati_map("Q101").to_string();
  EXPECT_EQ(s.rfind("y1 -> ", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), static_cast<long>(riccati_map("Q101").images.size()));
}

TEST(Orbit, OneStepMatchesImages) {
  const BirationalMap& m = riccati_map("Q12");
  OrbitStart s = generic_start(m);
  Orbit o = iterate_numeric(m, s, 1, 1e-9);
  ASSERT_EQ(o.points.size(), 2u);
  NumericPoint p;
  for (const auto& [k, v] : s.free) p[var::y(k)] = v;
  for (std::size_t i = 0; i < s.alpha.size(); ++i) p[var::alpha(static_cast<int>(i))] = s.alpha[i];
  for (std::size_t c = 0; c < o.free.size(); ++c)
    EXPECT_NEAR(std::abs(o.points[1][c] - eval_numeric(m.image(o.free[c]), p)), 0.0, 1e-14);
}

TEST(Orbit, ParametersStayConstant) {
  for (const char* n : {"Q12", "Q11", "Q101", "Q102"}) {
    const BirationalMap& m = riccati_map(n);
    Orbit o = iterate_numeric(m, generic_start(m), 50, 1e-9);
    EXPECT_EQ(o.points.size(), 51u);
    EXPECT_LT(o.max_alpha_drift, 1e-9) << n;
  }
}

TEST(Orbit, PoleIsReported) {
  const BirationalMap& m = riccati_map("Q12");
  OrbitStart s = generic_start(m);
  // y1 = 0 zeroes the numerator and sends y1 to 0; the next step divides by it
  s.free[1] = 0.0;
  s.free[5] = 0.0;
  s.free[9] = 0.0;
  EXPECT_THROW(iterate_numeric(m, s, 5), PoleAtPoint);
}

TEST(Orbit, BadStart) {
  const BirationalMap& m = riccati_map("Q11");
  OrbitStart s = generic_start(m);
  s.alpha.pop_back();
  EXPECT_THROW(iterate_numeric(m, s, 3), std::invalid_argument);
  s = generic_start(m);
  s.free.erase(s.free.begin());
  EXPECT_THROW(iterate_numeric(m, s, 3), std::invalid_argument);
}
