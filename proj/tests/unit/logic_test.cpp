#include <gtest/gtest.h>

#include "seqcal/fixtures.hpp"
#include "seqcal/kripke.hpp"
#include "seqcal/logic.hpp"
#include "seqcal/resolution.hpp"
#include "seqcal/text.hpp"

namespace seqcal {
namespace {

class CounterLogic : public ::testing::Test {
 protected:
  BooleanGraph g = fixtures::counter();
  Antichain ac(const char* t) { return parse_antichain(t, g); }
  Expr ex(const char* t) { return parse_expr(t); }
};

TEST_F(CounterLogic, InitialLinksAreLogicalLinks) {
  auto links = initial_logical_links(g);
  ASSERT_EQ(links.size(), 11u);
  for (const auto& l : links) EXPECT_TRUE(is_logical_link(g, l.aft, l.body[0], l.fore)) << render(l);
  EXPECT_EQ(links[1].fore, ac("{{v3}}"));
  EXPECT_EQ(links[0].aft, Antichain::top());
  EXPECT_EQ(links[8].aft, ac("{{v12}}"));
  EXPECT_EQ(links[8].body[0], ex("!Q1"));
}

TEST_F(CounterLogic, LogicalLinks) {
  EXPECT_TRUE(is_logical_link(g, ac("{{v7}}"), Expr::constant(false), Antichain::top()));
  EXPECT_TRUE(is_logical_link(g, ac("{{v3,v12}}"), Expr::constant(true), ac("{{v6},{v12}}")));
  EXPECT_FALSE(is_logical_link(g, ac("{{v3,v12}}"), Expr::constant(true), ac("{{v6},{v3}}")));
  EXPECT_FALSE(is_logical_link(g, Antichain::top(), ex("Q0"), Antichain::top()));
}

TEST_F(CounterLogic, MicroInference) {
  auto links = initial_logical_links(g);
  LogicLink a = micro_infer_logic(MicroKind::kA, links[4], links[6]);
  EXPECT_EQ(a.aft, ac("{{v6},{v9}}"));
  EXPECT_TRUE(equivalent(a.body[0], ex("!Q0 & Q1"), g.ap));
  EXPECT_EQ(a.fore, Antichain::top());
  LogicLink b = micro_infer_logic(MicroKind::kB, links[1], links[4]);
  EXPECT_EQ(b.aft, ac("{{v6}}"));
  EXPECT_EQ(render_simplified(b.body[0]), "true");
  EXPECT_EQ(b.fore, ac("{{v3}}"));
  LogicLink c = micro_infer_logic(MicroKind::kC, links[1], links[7]);
  EXPECT_TRUE(equivalent(c.body[0], ex("Q0 & !Q1"), g.ap));
  EXPECT_EQ(c.fore, ac("{{v3},{v12}}"));
  for (const auto* l : {&a, &b, &c}) EXPECT_TRUE(is_logical_link(g, l->aft, l->body[0], l->fore));
}

TEST_F(CounterLogic, MaxPlus) {
  EXPECT_EQ(max_plus_logic(g, ac("{{v3,v12}}"), {Expr::constant(true)}), ac("{{v6},{v12}}"));
  EXPECT_EQ(max_plus_logic(g, ac("{{v3,v12}}"), parse_word("true; true")), ac("{{v3},{v9}}"));
  EXPECT_EQ(max_plus_logic(g, Antichain::bottom(), {ex("Q0")}), Antichain::top());
  EXPECT_EQ(max_plus_logic(g, Antichain::top(), {ex("Reset")}), ac("{{v6},{v9}}"));
}

TEST_F(CounterLogic, MaxMinus) {
  EXPECT_EQ(max_minus_logic(g, Antichain::bottom(), {ex("Q0")}), Antichain::top());
  EXPECT_TRUE(leq(ac("{{v6,v12}}"), max_minus_logic(g, Antichain::top(), {ex("!Carry")})));
}

TEST_F(CounterLogic, DualityOverAllAntichains) {
  auto all = enumerate_sos(g.interior_mask());
  for (const BoolWord& alpha : {parse_word("true"), parse_word("Q0 | Reset"), parse_word("!Q1; true")}) {
    for (std::size_t i = 0; i < all.size(); i += 2) {
      Antichain mp = max_plus_logic(g, all[i], alpha);
      for (std::size_t j = 0; j < all.size(); j += 3)
        EXPECT_EQ(leq(all[j], mp), leq(all[i], max_minus_logic(g, all[j], alpha)));
    }
  }
}

TEST_F(CounterLogic, AgreesWithTheLiftedSetGraph) {
  Kripke k = fully_populated(g.ap);
  SetGraph lifted = lift_graph(k, g);
  auto all = enumerate_sos(g.interior_mask());
  for (const char* e : {"true", "Q0", "!Q0 & Q1", "Reset | Carry", "Q0 & Q1 & !Carry"}) {
    Expr be = ex(e);
    StateSet d = lift_expr(k, be);
    for (std::size_t i = 0; i < all.size(); i += 7) {
      EXPECT_EQ(max_plus_logic(g, all[i], {be}), max_plus(lifted, all[i], {d}));
      for (std::size_t j = 0; j < all.size(); j += 11)
        EXPECT_EQ(is_logical_link(g, all[i], be, all[j]), is_link1(lifted, all[i], d, all[j]));
    }
  }
}

TEST_F(CounterLogic, GeneralLinks) {
  EXPECT_TRUE(is_link_logic(g, {ac("{{v3,v12}}"), parse_word("true; true"), ac("{{v3},{v9}}")}));
  EXPECT_FALSE(is_link_logic(g, {ac("{{v3,v12}}"), parse_word("true; true"), Antichain::top()}));
}

TEST_F(CounterLogic, Elaborations) {
  Elaboration fig6 = fixtures::counter_normalized();
  EXPECT_TRUE(is_elaboration_logic(fig6, g)) << check_elaboration_logic(fig6, g).diagnostic;
  EXPECT_TRUE(is_elaboration_logic(initial_elaboration(g), g));

  Elaboration bad{fig6.name, fig6.ap, {}};
  for (const auto& a : fig6.dg.arcs()) {
    ElabVertex head = fig6.dg.vertex(a.head);
    if (head == ElabVertex::terminal()) head = ElabVertex::initial();
    bad.dg.add_arc(fig6.dg.vertex(a.tail), a.label, head);
  }
  ElabCheck c = check_elaboration_logic(bad, g);
  EXPECT_FALSE(c.ok);
  EXPECT_TRUE(c.condition == 2 || c.condition == 5) << c.diagnostic;
}

TEST_F(CounterLogic, Implicants) {
  EXPECT_FALSE(is_implicant_logic(g, parse_word("Q0")));
  EXPECT_TRUE(is_implicant_logic(g, parse_word("Q0; Q0")));
  EXPECT_TRUE(is_implicant_logic(g, parse_word("Reset; true; true; !Carry")));
  EXPECT_FALSE(is_implicant_logic(g, parse_word("Reset; true; !Carry")));
  BooleanGraph fig9 = fixtures::resolution_example();
  EXPECT_TRUE(is_implicant_logic(fig9, parse_word("P & R; true; !T")));
  EXPECT_TRUE(is_implicant_logic(fig9, parse_word("P; !Q")));
  EXPECT_FALSE(is_implicant_logic(fig9, parse_word("P; true; !T")));
}

TEST_F(CounterLogic, Rendering) {
  LogicLink l{ac("{{v3,v12}}"), parse_word("true"), ac("{{v6},{v12}}")};
  EXPECT_EQ(render(l, g.namer()), "<{{v3,v12}}, <true>, {{v6},{v12}}>");
  EXPECT_EQ(render_word(parse_word("P & R; true; !T")), "<P & R, true, !T>");
}

}  // namespace
}  // namespace seqcal
