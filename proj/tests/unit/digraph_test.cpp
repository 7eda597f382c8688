#include <gtest/gtest.h>

#include <algorithm>

#include "seqcal/error.hpp"
#include "seqcal/fixtures.hpp"
#include "seqcal/graphs.hpp"
#include "seqcal/logic.hpp"
#include "seqcal/text.hpp"

namespace seqcal {
namespace {

std::size_t idx(const BooleanGraph& g, const std::string& name) {
  return g.dg.index_of(VertexId{name});
}

TEST(Digraph, ClassifiesCounterVertices) {
  BooleanGraph g = fixtures::counter();
  EXPECT_EQ(g.dg.vertex_count(), 18u);
  EXPECT_EQ(g.dg.arc_count(), 11u);
  EXPECT_EQ(g.dg.classify(idx(g, "v0")), VertexKind::kInitial);
  EXPECT_EQ(g.dg.classify(idx(g, "v1")), VertexKind::kTerminal);
  EXPECT_EQ(g.dg.classify(idx(g, "v3")), VertexKind::kInterior);
  VertexSet want = vbit(3) | vbit(6) | vbit(9) | vbit(12);
  EXPECT_EQ(g.interior_mask(), want);
  EXPECT_EQ(fixtures::counter_sets().interior_mask(), want);
}

TEST(Digraph, IsolatedVertex) {
  BooleanGraph g = make_boolean_graph("lone", Props({"P"}), {}, {"v0"});
  EXPECT_EQ(g.dg.classify(0), VertexKind::kIsolated);
  EXPECT_THROW(g.dg.require_no_isolated(g.namer()), IsolatedVertexError);
  EXPECT_THROW(g.dg.classify(VertexId{"v9"}), UnknownVertexError);
}

TEST(Digraph, InteriorOfResolutionExample) {
  BooleanGraph g = fixtures::resolution_example();
  EXPECT_EQ(g.interior_mask(), vbit(1) | vbit(4) | vbit(7));
}

TEST(Digraph, NaturalVertexOrder) {
  EXPECT_LT(VertexId{"v2"}, VertexId{"v10"});
  EXPECT_LT(VertexId{"a"}, VertexId{"b"});
  EXPECT_EQ(natural_compare("v007", "v7"), natural_compare("v007", "v7"));
  BooleanGraph g = fixtures::counter();
  for (std::size_t i = 0; i < g.dg.vertex_count(); ++i)
    EXPECT_EQ(g.dg.vertex(i).name, "v" + std::to_string(i));
}

TEST(Digraph, Acceptance) {
  BooleanGraph g = fixtures::counter();
  EXPECT_TRUE(g.dg.accepts({parse_expr("Q0"), parse_expr("Q0")}));
  EXPECT_FALSE(g.dg.accepts({parse_expr("Q0")}));
  EXPECT_FALSE(g.dg.accepts({parse_expr("Q0"), parse_expr("!Q0")}));
  EXPECT_THROW(g.dg.accepts({}), EmptyWordError);
  EXPECT_FALSE(g.dg.accepts({parse_expr("Q0"), parse_expr("!!Q0")}));
  EXPECT_TRUE(g.dg.accepts({parse_expr("Q0"), parse_expr("!!Q0")}, semantic_eq(g.ap)));
}

TEST(Digraph, SetGraphAcceptsSevenSequences) {
  SetGraph g = fixtures::counter_sets();
  auto words = g.dg.accepted_words(5);
  EXPECT_EQ(words.size(), 7u);
  for (const auto& w : words) EXPECT_TRUE(g.dg.accepts(w));
}

TEST(Digraph, AcceptedWordsAreBounded) {
  BooleanGraph g = fixtures::resolution_example();
  auto words = g.dg.accepted_words(2);
  ASSERT_EQ(words.size(), 3u);
  for (const auto& w : words) EXPECT_EQ(w.size(), 2u);
  EXPECT_TRUE(g.dg.accepted_words(1).empty());
  Elaboration e = fixtures::counter_normalized();
  EXPECT_TRUE(e.dg.accepted_words(3).empty());
  EXPECT_EQ(e.dg.accepted_words(4).size(), 1u);
}

TEST(Digraph, AcceptsAgreesWithEnumeration) {
  BooleanGraph g = fixtures::counter();
  auto words = g.dg.accepted_words(2);
  for (const auto& w : words) EXPECT_TRUE(g.dg.accepts(w));
  for (const auto& a : g.dg.arcs())
    for (const auto& b : g.dg.arcs()) {
      BoolWord w{a.label, b.label};
      bool listed = std::find(words.begin(), words.end(), w) != words.end();
      EXPECT_EQ(g.dg.accepts(w), listed);
    }
}

TEST(Digraph, ArcsAreDeduplicated) {
  LabeledDigraph<VertexId, int> dg;
  std::size_t a = dg.add_arc(VertexId{"x"}, 1, VertexId{"y"});
  EXPECT_EQ(dg.add_arc(VertexId{"x"}, 1, VertexId{"y"}), a);
  EXPECT_NE(dg.add_arc(VertexId{"x"}, 2, VertexId{"y"}), a);
  EXPECT_EQ(dg.arc_count(), 2u);
  LabeledDigraph<VertexId, int> other;
  other.add_arc(VertexId{"x"}, 2, VertexId{"y"});
  other.add_arc(VertexId{"x"}, 1, VertexId{"y"});
  EXPECT_TRUE(canonically_equal(dg, other));
  other.add_arc(VertexId{"y"}, 1, VertexId{"z"});
  EXPECT_FALSE(canonically_equal(dg, other));
}

}  // namespace
}  // namespace seqcal
