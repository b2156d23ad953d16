#include <gtest/gtest.h>

#include "qgarnier/ratfield.hpp"

using namespace qgarnier;

namespace {

RationalFunction P(const char* s) { return parse_rational_function(s); }
RationalFunction y(int k) { return RationalFunction::variable(var::y(k)); }

}  // namespace

TEST(RationalFunction, FieldIdentities) {
  EXPECT_EQ(y(1) + RationalFunction(0), y(1));
  EXPECT_EQ(P("y1/y2") * P("y2/y1"), RationalFunction(1));
  EXPECT_EQ(y(1).pow(-1), P("1/y1"));
  EXPECT_EQ(P("1+y1").pow(2), P("1 + 2*y1 + y1^2"));
  EXPECT_EQ(P("(3+y4)/(y2-7)").pow(0), RationalFunction(1));
  EXPECT_THROW(RationalFunction(0).inverse(), DivisionByZero);
  EXPECT_THROW(RationalFunction(0).pow(-2), DivisionByZero);
}

TEST(RationalFunction, QuotientStaysIrreducible) {
  RationalFunction f = (P("1+y1^2") / P("1+y1")).reduced();
  EXPECT_EQ(f.to_string(), "(1 + y1^2)/(1 + y1)");
}

TEST(RationalFunction, EqualityIgnoresReductionState) {
  RationalFunction f = P("(1+y1)^2") / P("1+y1");
  EXPECT_EQ(f, y(1) + RationalFunction(1));
  EXPECT_EQ(f.reduced(), y(1) + RationalFunction(1));
  EXPECT_NE(y(1), y(2));
  EXPECT_EQ(y(1), y(1) + (y(2) - y(2)));
}

TEST(RationalFunction, CanonicalText) {
  EXPECT_EQ(P("(y1*y2 + 1 + y1)/y2").to_string(), "(1 + y1 + y1*y2)/(y2)");
  for (const char* s : {"(1 + y1 + y1*y2)/(y2)", "y1*a0 - 3*eps^2", "(2*t - q)/(1 - q)", "-y1/y2^3"}) {
    RationalFunction f = P(s);
    EXPECT_EQ(P(f.to_string().c_str()), f) << s;
    EXPECT_EQ(P(f.to_string().c_str()).to_string(), f.to_string()) << s;
  }
}

TEST(RationalFunction, ParserRejectsGarbage) {
  EXPECT_THROW(P("y1 +"), ParseError);
  EXPECT_THROW(P("(y1"), ParseError);
  EXPECT_THROW(P("z7"), ParseError);
}

TEST(Substitute, Examples) {
  Substitution s;
  s.emplace(var::y(11), RationalFunction(-1));
  EXPECT_EQ(substitute(P("y1*y2*y11"), s), P("-y1*y2"));

  Substitution swap;
  swap.emplace(var::y(1), P("1/y2"));
  swap.emplace(var::y(2), P("1/y1"));
  EXPECT_EQ(substitute(y(1), swap), P("1/y2"));

  Substitution one;
  one.emplace(var::y(1), y(2));
  EXPECT_EQ(substitute(P("y1*y3/(1+y1)"), one), P("y2*y3/(1+y2)"));
  EXPECT_EQ(P("y1*y3/(1+y1)"), P("y3/(1+y1^-1)"));
}

TEST(Limit, ValuationAndDivergence) {
  LimitResult a = limit_zero(P("eps*y1 + y2"), var::eps);
  ASSERT_FALSE(is_divergent(a));
  EXPECT_EQ(std::get<RationalFunction>(a), y(2));

  LimitResult b = limit_zero(P("y1/eps"), var::eps);
  ASSERT_TRUE(is_divergent(b));
  EXPECT_EQ(std::get<Divergent>(b).valuation, -1);

  LimitResult c = limit_zero(P("(eps + eps^2*y3)/(eps*y1 + eps^3)"), var::eps);
  ASSERT_FALSE(is_divergent(c));
  EXPECT_EQ(std::get<RationalFunction>(c), P("1/y1"));

  EXPECT_EQ(valuation(P("eps^2*(1+y1)/(eps+eps^2)"), var::eps), 1);
}

TEST(Evaluate, NumericAndExact) {
  NumericPoint p{{var::y(1), 2.0}, {var::y(2), 3.0}};
  EXPECT_DOUBLE_EQ(eval_numeric(P("y1*y2"), p).real(), 6.0);
  EXPECT_THROW(eval_numeric(P("1/(1-y1)"), NumericPoint{{var::y(1), 1.0}}), PoleAtPoint);

  ExactPoint e;
  BigRational prod(1);
  RationalFunction q(1);
  for (int k = 1; k <= 12; ++k) {
    BigRational v = make_rational(k * 37 + 5, k + 2);
    e[var::y(k)] = v;
    prod *= v;
    q = q * y(k);
  }
  auto got = eval_exact(q, e);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, prod);
}

TEST(IdentityTest, AgreesWithExactEquality) {
  EXPECT_TRUE(random_identity_test(y(1), y(1) + (y(2) - y(2)), 20, 7));
  EXPECT_TRUE(random_identity_test(P("(1+y1)^3/(1+y1)"), P("1+2*y1+y1^2"), 20, 7));
  EXPECT_FALSE(random_identity_test(P("y1/(1+y2)"), P("y1/(1+y2) + 1/10^9"), 20, 7));
  EXPECT_THROW(random_identity_test(y(1), y(1), 0, 7), std::invalid_argument);
}

TEST(LaurentMonomial, FromRationalFunction) {
  auto m = LaurentMonomial::from(P("3*y1^2/(y2*y5^3)"));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->exponent(var::y(1)), 2);
  EXPECT_EQ(m->exponent(var::y(5)), -3);
  EXPECT_EQ(m->to_rational_function(), P("3*y1^2/(y2*y5^3)"));
  EXPECT_FALSE(LaurentMonomial::from(P("1+y1")).has_value());
}
