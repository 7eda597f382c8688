#include <gtest/gtest.h>

#include <random>

#include "seqcal/boolexpr.hpp"
#include "seqcal/error.hpp"
#include "seqcal/kripke.hpp"

namespace seqcal {
namespace {

const Props kCounter({"Q0", "Q1", "Reset", "Carry"});

StateSet states(std::initializer_list<std::size_t> m) { return StateSet(16, m); }

TEST(Expr, ParseAndRender) {
  EXPECT_EQ(render(parse_expr("Reset & (Q0 | Q1)")), "Reset & (Q0 | Q1)");
  EXPECT_EQ(render(parse_expr("!a | b & c")), "!a | (b & c)");
  EXPECT_EQ(parse_expr(render(parse_expr("!a | b & c"))), parse_expr("!a | b & c"));
  EXPECT_EQ(render(parse_expr("!(a | b)")), "!(a | b)");
  EXPECT_EQ(parse_expr("a & (b & c)"), parse_expr("(a & b) & c"));
  EXPECT_EQ(parse_expr("b & a"), parse_expr("a & b"));
  EXPECT_NE(parse_expr("a & b"), parse_expr("a | b"));
}

TEST(Expr, AndOrAreFlattened) {
  Expr e = parse_expr("a & (b & (c & d))");
  ASSERT_EQ(e.kind(), Expr::Kind::kAnd);
  EXPECT_EQ(e.children().size(), 4u);
}

TEST(Expr, ParseErrorsCarryPosition) {
  try {
    parse_expr("a & ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GE(e.column(), 4u);
  }
  EXPECT_THROW(parse_expr("a b"), ParseError);
  EXPECT_THROW(parse_expr("(a"), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
}

TEST(Expr, ReservedWordsAreConstants) {
  EXPECT_EQ(parse_expr("true").kind(), Expr::Kind::kTrue);
  EXPECT_EQ(parse_expr("false").kind(), Expr::Kind::kFalse);
  EXPECT_THROW(Props({"true"}), Error);
}

TEST(Expr, Eval) {
  EXPECT_TRUE(eval(Expr::constant(true), kCounter, 5));
  EXPECT_TRUE(eval(parse_expr("Reset & (Q0 | Q1)"), kCounter, 9));
  EXPECT_FALSE(eval(parse_expr("Q0 & Q1 & !Carry"), kCounter, 6));
  EXPECT_THROW(eval(parse_expr("Zed"), TruthAssignment{{"Q0", true}}), UndefinedAtomError);
}

TEST(Expr, StateTableRows) {
  // s9: Q0 false, Q1 true, Reset true, Carry true.
  auto t = assignment_of(kCounter, 9);
  EXPECT_FALSE(t["Q0"]);
  EXPECT_TRUE(t["Q1"]);
  EXPECT_TRUE(t["Reset"]);
  EXPECT_TRUE(t["Carry"]);
  for (std::size_t s = 0; s < 16; ++s) {
    std::vector<bool> v;
    for (std::size_t a = 0; a < 4; ++a) v.push_back(atom_value(s, a, 4));
    EXPECT_EQ(state_of(v), s);
  }
}

TEST(Expr, Denotation) {
  EXPECT_EQ(denotation(parse_expr("Q0"), kCounter), states({2, 3, 6, 7, 10, 11, 14, 15}));
  EXPECT_EQ(denotation(parse_expr("Q1"), kCounter), states({1, 2, 5, 6, 9, 10, 13, 14}));
  EXPECT_EQ(denotation(parse_expr("Reset"), kCounter), states({8, 9, 10, 11, 12, 13, 14, 15}));
  EXPECT_EQ(denotation(parse_expr("Carry"), kCounter), states({4, 5, 6, 7, 8, 9, 10, 11}));
  EXPECT_TRUE(denotation(Expr::constant(false), kCounter).empty());
  EXPECT_EQ(denotation(parse_expr("Reset & (Q0 | Q1)"), kCounter),
            states({9, 10, 11, 13, 14, 15}));
}

TEST(Expr, DenotationSizeLimit) {
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("a" + std::to_string(i));
  EXPECT_THROW(denotation(parse_expr("a0"), Props(names)), SizeLimitError);
}

TEST(Expr, Implies) {
  Props pq({"P", "Q"});
  EXPECT_TRUE(implies(parse_expr("P & Q"), parse_expr("P"), pq));
  EXPECT_FALSE(implies(parse_expr("Reset & (Q0 | Q1)"), parse_expr("Q0"), kCounter));
  EXPECT_FALSE(eval(parse_expr("Q0"), kCounter, 9));
  EXPECT_TRUE(implies(Expr::constant(false), parse_expr("Q0"), kCounter));
  EXPECT_TRUE(equivalent(parse_expr("Q0 | !Q0"), Expr::constant(true), kCounter));
}

Expr random_expr(std::mt19937& rng, const Props& ap, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 2);
  std::uniform_int_distribution<std::size_t> atom(0, ap.size() - 1);
  switch (kind(rng)) {
    case 0: return Expr::constant(rng() & 1);
    case 1:
    case 2: return Expr::atom(ap.name(atom(rng)));
    case 3: return !random_expr(rng, ap, depth - 1);
    case 4: return random_expr(rng, ap, depth - 1) & random_expr(rng, ap, depth - 1);
    default: return random_expr(rng, ap, depth - 1) | random_expr(rng, ap, depth - 1);
  }
}

TEST(Expr, DenotationIsAHomomorphism) {
  Props ap({"a", "b", "c", "d"});
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Expr x = random_expr(rng, ap, 3), y = random_expr(rng, ap, 3);
    StateSet dx = denotation(x, ap), dy = denotation(y, ap);
    EXPECT_EQ(denotation(x & y, ap), dx & dy);
    EXPECT_EQ(denotation(x | y, ap), dx | dy);
    EXPECT_EQ(denotation(!x, ap), ~dx);
    EXPECT_EQ(implies(x, y, ap), dx.subset_of(dy));
    EXPECT_EQ(denotation(simplify(x), ap), dx);
    EXPECT_EQ(lift_expr(fully_populated(ap), x), dx);
  }
}

TEST(Expr, SimplifiedRendering) {
  EXPECT_EQ(render_simplified(parse_expr("Q0 | !Q0")), "true");
  EXPECT_EQ(render_simplified(parse_expr("a & false")), "false");
  EXPECT_EQ(render_simplified(parse_expr("a & true")), "a");
}

TEST(LiteralProduct, Recognition) {
  auto p = literal_product(parse_expr("a & x"));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (LiteralProduct{{"a", true}, {"x", true}}));
  EXPECT_FALSE(literal_product(parse_expr("a | b")));
  auto t = literal_product(Expr::constant(true));
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->empty());
  EXPECT_EQ(*literal_product(parse_expr("!b")), (LiteralProduct{{"b", false}}));
  EXPECT_FALSE(literal_product(parse_expr("a & !(b & c)")));
  EXPECT_FALSE(literal_product(parse_expr("a & a")));
  EXPECT_FALSE(literal_product(parse_expr("P & !P")));
}

TEST(LiteralProduct, Resolvent) {
  auto r = boolean_resolvent(*literal_product(parse_expr("a & x")),
                             *literal_product(parse_expr("b & !x")));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->expr, parse_expr("a & b"));
  EXPECT_EQ(r->clash, "x");

  r = boolean_resolvent(*literal_product(parse_expr("P & Q")), *literal_product(parse_expr("!Q")));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->expr, parse_expr("P"));
  EXPECT_EQ(r->clash, "Q");

  EXPECT_FALSE(boolean_resolvent(*literal_product(parse_expr("a & x & y")),
                                 *literal_product(parse_expr("b & !x & !y"))));
  EXPECT_FALSE(boolean_resolvent(*literal_product(parse_expr("a")),
                                 *literal_product(parse_expr("b"))));
  r = boolean_resolvent(*literal_product(parse_expr("a & x")),
                        *literal_product(parse_expr("a & !x")));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->expr, parse_expr("a"));
}

TEST(LiteralProduct, ResolventWeakensTheDisjunction) {
  Props ap({"a", "b", "c", "d"});
  std::mt19937 rng(5);
  std::size_t checked = 0;
  while (checked < 400) {
    LiteralProduct p1, p2;
    for (const auto& n : ap.names()) {
      int r1 = rng() % 3, r2 = rng() % 3;
      if (r1) p1.push_back({n, r1 == 1});
      if (r2) p2.push_back({n, r2 == 1});
    }
    auto r = boolean_resolvent(p1, p2);
    if (!r) continue;
    ++checked;
    Expr d = product_expr(p1) | product_expr(p2);
    EXPECT_TRUE(implies(r->expr, d, ap)) << render(d) << " from " << render(r->expr);
  }
}

}  // namespace
}  // namespace seqcal
