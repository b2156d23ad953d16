#include <gtest/gtest.h>

#include "qgarnier/quiver.hpp"
#include "qgarnier/weylrep.hpp"

using namespace qgarnier;

namespace {

Quiver three_cycle() { return Quiver::from_arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}); }

}  // namespace

TEST(Quiver, MutationArrowRules) {
  Quiver m = mutate_matrix(three_cycle(), 2);
  EXPECT_EQ(m, Quiver::from_arrows(3, {{2, 1, 1}, {3, 2, 1}}));
  EXPECT_EQ(m.lambda(1, 3), 0);
  EXPECT_EQ(mutate_matrix(mutate_matrix(quiver_q12(), 7), 7), quiver_q12());
}

TEST(Quiver, RejectsBadInput) {
  EXPECT_THROW(Quiver::from_matrix({{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Quiver::from_arrows(2, {{1, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(mutate_matrix(three_cycle(), 4), InvalidVertex);
  EXPECT_THROW(confluence_matrix(three_cycle(), 1, 1), std::invalid_argument);
  EXPECT_THROW(confluence_matrix(three_cycle(), 1, 2, VertexMap{{3, 3}}), InvalidPermutation);
  EXPECT_THROW(catalog_quiver("Q13"), UnknownName);
}

TEST(Quiver, Permutations) {
  Quiver q = quiver_q12();
  EXPECT_EQ(permute(q, VertexMap{}), q);
  EXPECT_EQ(transpose_vertices(transpose_vertices(q, 1, 2), 1, 2), q);
  EXPECT_EQ(reverse(reverse(q)), q);
  EXPECT_EQ(reverse(three_cycle()), Quiver::from_arrows(3, {{2, 1, 1}, {3, 2, 1}, {1, 3, 1}}));
}

TEST(Confluence, FigureOne) {
  Quiver q = Quiver::from_matrix({{0, -1, -1, 1}, {1, 0, -1, 1}, {1, 1, 0, -1}, {-1, -1, 1, 0}});
  EXPECT_EQ(confluence_matrix(q, 4, 1), Quiver::from_matrix({{0, -2, 0}, {2, 0, -1}, {0, 1, 0}}));
}

TEST(Confluence, IsolatedVertices) {
  Quiver q(4);
  q.at(1, 2) = 1;
  q.at(2, 1) = -1;
  Quiver r = confluence_matrix(q, 4, 3);
  EXPECT_EQ(r.size(), 3);
  EXPECT_EQ(r, Quiver::from_arrows(3, {{1, 2, 1}}));
}

TEST(Catalog, Sizes) {
  std::map<std::string, int> want{{"Q12", 12}, {"Q11", 11}, {"Q101", 10}, {"Q102", 10},
                                  {"Q103", 10}, {"Q104", 10}, {"Q105", 10}};
  for (const auto& [name, n] : want) EXPECT_EQ(catalog_quiver(name).size(), n) << name;
  EXPECT_EQ(confluence_matrix(quiver_q12(), 12, 1), catalog_quiver("Q11"));
}

TEST(Catalog, Q12Shape) {
  Quiver q = quiver_q12();
  for (int v = 1; v <= 12; ++v) {
    int in = 0, out = 0;
    for (int w = 1; w <= 12; ++w) {
      if (q.lambda(v, w) > 0) out += q.lambda(v, w);
      if (q.lambda(w, v) > 0) in += q.lambda(w, v);
    }
    EXPECT_EQ(in, 2) << v;
    EXPECT_EQ(out, 2) << v;
  }
  for (int k = 0; k < 6; ++k) {
    int a = 2 * k + 1, b = (2 * k + 2) % 12 + 1;
    EXPECT_EQ(q.lambda(a, b), 1) << a << "->" << b;
  }
}

TEST(Catalog, GeneratorsPreserveQuiver) {
  for (const auto& name : catalog_names()) {
    const Representation& rep = catalog(name);
    for (const auto& g : rep.generator_order) {
      Quiver q = rep.quiver;
      for (const auto& e : rep.word(g).steps) {
        switch (e.kind) {
          case ElementaryStep::Kind::Mutation: q = mutate_matrix(q, e.i); break;
          case ElementaryStep::Kind::Transposition: q = transpose_vertices(q, e.i, e.j); break;
          case ElementaryStep::Kind::Reversal: q = reverse(q); break;
        }
      }
      EXPECT_EQ(q, rep.quiver) << name << " " << g;
    }
  }
}

TEST(QuiverIo, JsonRoundTripAndDot) {
  for (const auto& name : catalog_names()) {
    Quiver q = catalog_quiver(name);
    EXPECT_EQ(quiver_from_json(quiver_to_json(q)), q) << name;
  }
  nlohmann::json j = quiver_to_json(Quiver::from_arrows(2, {{1, 2, 2}}));
  EXPECT_EQ(j.dump(), R"({"arrows":[[1,2,2]],"n":2})");
  std::string dot = quiver_to_dot(Quiver::from_arrows(2, {{1, 2, 2}}), "K");
  EXPECT_EQ(dot, "digraph K {\n  1;\n  2;\n  1 -> 2;\n  1 -> 2;\n}\n");
}
