#include <gtest/gtest.h>

#include "qgarnier/seed.hpp"
#include "qgarnier/weylrep.hpp"

using namespace qgarnier;

namespace {

RationalFunction P(const char* s) { return parse_rational_function(s); }
RationalFunction y(int k) { return RationalFunction::variable(var::y(k)); }

Seed<RationalFunction> q12_seed() { return initial_seed<RationalFunction>(quiver_q12()); }

}  // namespace

// Written tokens act on seeds rightmost first; a Word stores them in the
// order they act.
TEST(Word, Tokens) {
  Word w = parse_word("m1 (1,2) m1 iota");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w.steps[0], ElementaryStep::reversal());
  EXPECT_EQ(w.steps[1], ElementaryStep::mutation(1));
  EXPECT_EQ(w.steps[2], ElementaryStep::transposition(1, 2));
  EXPECT_EQ(w.steps_text(), "iota m1 (1,2) m1");
  EXPECT_EQ(parse_word("m1m2(2,4)m2m1").steps_text(), "m1 m2 (2,4) m2 m1");
  EXPECT_THROW(parse_word("m1 (1,"), ParseError);
  EXPECT_THROW(parse_word("r0"), UnknownName);
}

// (1,3,5,7,9,11) is the written product (1,3)(1,5)(1,7)(1,9)(1,11)
TEST(Word, CycleExpansion) {
  Word w = parse_word("(1,3,5,7,9,11)");
  EXPECT_EQ(w.steps_text(), "(1,11) (1,9) (1,7) (1,5) (1,3)");
  EXPECT_EQ(parse_word("(1,3)(1,5)(1,7)(1,9)(1,11)").steps, w.steps);
  // slot k receives the coefficient from slot k+2, as pi1 does on Q12
  auto s = apply_word(q12_seed(), w);
  for (int k = 1; k <= 11; k += 2) EXPECT_EQ(s.y(k), y(k == 11 ? 1 : k + 2)) << k;
}

TEST(Seed, MutationAtOneOnQ12) {
  auto s = mutate(q12_seed(), 1);
  EXPECT_EQ(s.y(1), P("1/y1"));
  EXPECT_EQ(s.y(3), P("y3/(1+y1^-1)"));
  EXPECT_EQ(s.y(4), P("(1+y1)*y4"));
  EXPECT_EQ(s.y(11), P("(1+y1)*y11"));
  EXPECT_EQ(s.y(12), P("y12/(1+y1^-1)"));
  for (int k : {2, 5, 6, 7, 8, 9, 10}) EXPECT_EQ(s.y(k), y(k)) << k;
  EXPECT_TRUE(seeds_equal(mutate(s, 1), q12_seed()));
}

TEST(Seed, ReversalInvertsCoefficients) {
  auto s = reverse(q12_seed());
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(s.y(k), y(k).inverse());
  EXPECT_EQ(s.quiver, reverse(quiver_q12()));
}

TEST(Seed, WordsOnQ12) {
  auto s = q12_seed();
  EXPECT_TRUE(seeds_equal(apply_word(s, Word{}), s));
  Word r0 = parse_word("m1 (1,2) m1");
  auto t = apply_word(s, r0);
  EXPECT_EQ(t.quiver, quiver_q12());
  EXPECT_EQ(t.y(3), P("y3*(1+y2)/(1+y1^-1)"));
  EXPECT_TRUE(seeds_equal(apply_word(t, r0), s));
}

TEST(Automorphism, CompileComposeAct) {
  const Representation& rep = catalog("Q12");
  Automorphism r0 = automorphism_of(rep, "r0"), r1 = automorphism_of(rep, "r1");
  RationalFunction a0 = rep.root("a0").to_rational_function(), a1 = rep.root("a1").to_rational_function();
  EXPECT_TRUE(compile(Word{}, rep.quiver).is_identity());
  EXPECT_EQ(act_on(r0, a0), a0.inverse());
  EXPECT_EQ(act_on(identity_automorphism(12), a0 + y(3)), a0 + y(3));
  EXPECT_EQ(act_on(compose(r0, r1), a0), a1);
  EXPECT_EQ(compose(r0, identity_automorphism(12)), r0);
  EXPECT_TRUE(compose(r0, r0).is_identity());
  RationalFunction q = rep.root("q").to_rational_function();
  EXPECT_EQ(act_on(automorphism_of(rep, "pi3"), q), q.inverse());
  // compile of a concatenation agrees with composition of the parts
  EXPECT_EQ(automorphism_of(rep, "r0 r5"), compose(r0, automorphism_of(rep, "r5")));
}

TEST(Automorphism, TwoWordsForR0) {
  const Representation& rep = catalog("Q12");
  EXPECT_EQ(compile(parse_word("m1 (1,2) m1"), rep.quiver), compile(parse_word("m2 (1,2) m2"), rep.quiver));
}

TEST(Confluence, FigureOneSeed) {
  Quiver q = Quiver::from_matrix({{0, -1, -1, 1}, {1, 0, -1, 1}, {1, 1, 0, -1}, {-1, -1, 1, 0}});
  SeedLimit lim = confluence_seed(initial_seed<RationalFunction>(q), 4, 1);
  ASSERT_TRUE(std::holds_alternative<Seed<RationalFunction>>(lim));
  const auto& s = std::get<Seed<RationalFunction>>(lim);
  EXPECT_EQ(s.size(), 3);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(s.y(k), y(k));
  LimitResult merged = confluence_function(y(1) * y(4), 4, 4, 1, VertexMap{});
  ASSERT_FALSE(is_divergent(merged));
  EXPECT_EQ(std::get<RationalFunction>(merged), y(1));
}

TEST(Confluence, R0R5R0GivesQ11R0) {
  const Representation& q12 = catalog("Q12");
  const Representation& q11 = catalog("Q11");
  auto image = apply_word(initial_seed<RationalFunction>(q12.quiver), q12.word("r0 r5 r0"));
  SeedLimit lim = confluence_seed(image, 12, 1);
  ASSERT_TRUE(std::holds_alternative<Seed<RationalFunction>>(lim));
  auto want = apply_word(initial_seed<RationalFunction>(q11.quiver), q11.word("r0"));
  EXPECT_TRUE(seeds_equal(std::get<Seed<RationalFunction>>(lim), want));
}

TEST(Confluence, TauCOnQ11Diverges) {
  const Representation& q11 = catalog("Q11");
  auto image = apply_word(initial_seed<RationalFunction>(q11.quiver), q11.word("tau_c"));
  SeedLimit lim = confluence_seed(image, 5, 8, VertexMap{{11, 5}});
  EXPECT_TRUE(std::holds_alternative<Divergent>(lim));
}
