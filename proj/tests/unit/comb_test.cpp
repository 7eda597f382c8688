#include <gtest/gtest.h>

#include "seqcal/comb.hpp"
#include "seqcal/error.hpp"
#include "seqcal/fixtures.hpp"
#include "seqcal/kripke.hpp"
#include "seqcal/text.hpp"

namespace seqcal {
namespace {

StateSet st(std::initializer_list<std::size_t> m) { return StateSet(16, m); }
StateSet full() { return StateSet::full(16); }

Antichain ac(const std::string& text) {
  static const BooleanGraph base = fixtures::counter();
  return parse_antichain(text, base);
}

class CounterSets : public ::testing::Test {
 protected:
  SetGraph g = fixtures::counter_sets();
  Kripke k = fully_populated(fixtures::counter().ap);

  StateSet lift(const char* e) { return lift_expr(k, parse_expr(e)); }

  // The set-level image of the six-vertex counter elaboration.
  SetElaboration fig4() {
    Elaboration e = fixtures::counter_normalized();
    SetElaboration out{16, {}};
    for (const auto& v : e.dg.vertices()) out.dg.add_vertex(v);
    for (const auto& a : e.dg.arcs()) out.dg.add_arc(a.tail, lift_expr(k, a.label), a.head);
    return out;
  }
};

TEST(CrossProduct, ListsEverySequenceInOrder) {
  auto seqs = cross_product({StateSet(6, {0, 1, 2}), StateSet(6, {3}), StateSet(6, {4, 5})});
  ASSERT_EQ(seqs.size(), 6u);
  EXPECT_EQ(seqs.front(), (ElementSequence{0, 3, 4}));
  EXPECT_EQ(seqs[1], (ElementSequence{0, 3, 5}));
  EXPECT_EQ(seqs.back(), (ElementSequence{2, 3, 5}));
  EXPECT_TRUE(cross_product({StateSet(3)}).empty());
  EXPECT_EQ(cross_product({StateSet(3, {1})}), (std::vector<ElementSequence>{{1}}));
  EXPECT_EQ(product_size({StateSet(6, {0, 1, 2}), StateSet(6, {4, 5})}), 6u);
}

TEST(ProductTotal, EmptyEndsAreVacuouslyTotal) {
  BinaryRelation rab{0, 2, {}}, rbc{2, 0, {}};
  EXPECT_TRUE(product_total(rab, rbc).total);
  EXPECT_TRUE(product_total(rab, rbc).antichain_inequality);
}

TEST(ProductTotal, SizeLimit) {
  BinaryRelation rab{1, 13, {}}, rbc{13, 1, {}};
  EXPECT_THROW(product_total(rab, rbc), SizeLimitError);
}

TEST_F(CounterSets, EnumeratedLinkAndWeakerVersion) {
  CombLink l{ac("{{v3,v12}}"), {st({1, 6, 12}), st({3}), st({1, 6})}, ac("{{v6},{v9}}")};
  EXPECT_TRUE(is_link_bf(g, l));
  CombLink weaker{ac("{{v3,v6,v12}}"), {st({1, 12}), st({3}), st({1, 6})}, ac("{{v9}}")};
  EXPECT_TRUE(is_link_bf(g, weaker));
  // s0 makes every atom false, and no arc from an initial to a terminal vertex allows it.
  CombLink none{ac("{{}}"), {st({0})}, ac("{{}}")};
  EXPECT_FALSE(is_link_bf(g, none));
}

TEST_F(CounterSets, LinkPropertiesOfOneCase) {
  // One of the enumerated cases, then s3 alone, which no accepted word covers.
  unsigned mask = link_properties(g, vbit(3) | vbit(12), {1, 3, 1}, vbit(6));
  EXPECT_NE(mask, 0u);
  EXPECT_EQ(link_properties(g, 0, {3}, 0), 0u);
  EXPECT_EQ(link_properties(g, 0, {9}, 0) & 1u, 1u);
}

TEST_F(CounterSets, ConcatenatedChain) {
  CombLink l1{ac("{{v3,v12}}"), {st({1, 6, 12})}, ac("{{v6},{v12}}")};
  CombLink l2{ac("{{v6,v12}}"), {st({3})}, ac("{{v3},{v9}}")};
  CombLink l3{ac("{{v3,v9}}"), {st({1, 6})}, ac("{{v6},{v9}}")};
  for (const auto* l : {&l1, &l2, &l3}) {
    EXPECT_TRUE(is_link_bf(g, *l)) << render(*l);
    EXPECT_TRUE(is_link1(g, l->aft, l->body[0], l->fore));
  }
  EXPECT_EQ(complement(l1.fore), l2.aft);
  EXPECT_EQ(complement(l2.fore), l3.aft);
  CombLink all{l1.aft, {l1.body[0], l2.body[0], l3.body[0]}, l3.fore};
  EXPECT_TRUE(is_link_bf(g, all));
}

TEST_F(CounterSets, LinksOfLengthOne) {
  for (const auto& l : initial_links(g)) EXPECT_TRUE(is_link1(g, l.aft, l.body[0], l.fore));
  EXPECT_TRUE(is_link1(g, ac("{{v3}}"), StateSet(16), Antichain::top()));
  EXPECT_TRUE(is_link1(g, Antichain::bottom(), full(), Antichain::top()));
  EXPECT_FALSE(is_link1(g, Antichain::top(), full(), Antichain::top()));
}

TEST_F(CounterSets, InitialLinksRejectIsolatedVertices) {
  SetGraph h = make_set_graph(2, {{"v0", StateSet(2, {0}), "v1"}}, {"v2"});
  EXPECT_THROW(initial_links(h), IsolatedVertexError);
}

TEST_F(CounterSets, MicroInferenceOutputsAreLinks) {
  auto links = initial_links(g);
  for (std::size_t i = 0; i < links.size(); ++i)
    for (std::size_t j = 0; j < links.size(); ++j)
      for (MicroKind kind : {MicroKind::kA, MicroKind::kB, MicroKind::kC}) {
        CombLink l = micro_infer(kind, links[i], links[j]);
        EXPECT_TRUE(is_link1(g, l.aft, l.body[0], l.fore)) << render(l);
      }
}

TEST_F(CounterSets, MaxPlusWorkedValues) {
  EXPECT_EQ(max_plus(g, ac("{{v3,v12}}"), {full()}), ac("{{v6},{v12}}"));
  EXPECT_EQ(max_plus(g, ac("{{v6,v12}}"), {full()}), ac("{{v3},{v9}}"));
  EXPECT_EQ(max_plus(g, ac("{{v3,v12}}"), {full(), full()}), ac("{{v3},{v9}}"));
  EXPECT_EQ(max_plus(g, Antichain::bottom(), {st({3})}), Antichain::top());
  EXPECT_EQ(max_plus(g, Antichain::top(), {lift("Reset")}), ac("{{v6},{v9}}"));
}

TEST_F(CounterSets, MaxMinus) {
  EXPECT_EQ(max_minus(g, Antichain::bottom(), {st({3})}), Antichain::top());
  Antichain m = max_minus(g, ac("{{v6},{v12}}"), {full()});
  EXPECT_TRUE(leq(ac("{{v3,v12}}"), m));
  SetGraph one = make_set_graph(2, {{"v0", StateSet(2, {0}), "v1"}, {"v1", StateSet(2, {1}), "v2"}});
  EXPECT_EQ(max_minus(one, Antichain::top(), {StateSet(2, {1})}), Antichain::singleton(vbit(1)));
}

TEST_F(CounterSets, MaxAgreesWithDefinition) {
  Budget budget(50'000'000);
  for (const char* aft : {"{{v3,v12}}", "{{}}", "{{v6},{v9}}", "{{v3},{v12}}"}) {
    for (const SetSequence& alpha :
         {SetSequence{full()}, SetSequence{lift("Q0")}, SetSequence{lift("!Q1"), lift("Q0")}}) {
      EXPECT_EQ(max_plus(g, ac(aft), alpha), max_plus_bf(g, ac(aft), alpha, budget));
      EXPECT_EQ(max_minus(g, ac(aft), alpha), max_minus_bf(g, ac(aft), alpha, budget));
    }
  }
}

TEST_F(CounterSets, ThreeFormulationsAgree) {
  SetSequence alpha{full()};
  auto all = enumerate_sos(g.interior_mask());
  ASSERT_EQ(all.size(), 168u);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    Antichain mp = max_plus(g, all[i], alpha);
    for (std::size_t j = 0; j < all.size(); j += 5) {
      bool link = is_link1(g, all[i], alpha[0], all[j]);
      EXPECT_EQ(link, leq(all[j], mp));
      EXPECT_EQ(link, leq(all[i], max_minus(g, all[j], alpha)));
    }
  }
}

TEST_F(CounterSets, Elaboration) {
  SetElaboration e = fig4();
  EXPECT_TRUE(is_elaboration(e, g)) << check_elaboration(e, g).diagnostic;

  SetElaboration shrunk{16, {}};
  for (const auto& v : e.dg.vertices()) shrunk.dg.add_vertex(v);
  for (std::size_t i = 0; i < e.dg.arc_count(); ++i) {
    const auto& a = e.dg.arc(i);
    shrunk.dg.add_arc(a.tail, i == 1 ? StateSet(16) : a.label, a.head);
  }
  EXPECT_TRUE(is_elaboration(shrunk, g));

  ElabVertex bad = parse_elab_vertex("<{{v6},{v9}}, {{v6,v9,v12}}>", fixtures::counter());
  ElabVertex good = parse_elab_vertex("<{{v6},{v9}}, {{v6,v9}}>", fixtures::counter());
  SetElaboration broken{16, {}};
  for (const auto& a : e.dg.arcs()) {
    auto swap = [&](const ElabVertex& v) { return v == good ? bad : v; };
    broken.dg.add_arc(swap(e.dg.vertex(a.tail)), a.label, swap(e.dg.vertex(a.head)));
  }
  ElabCheck c = check_elaboration(broken, g);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.condition, 4);
  EXPECT_NE(c.diagnostic.find("condition 4"), std::string::npos);
}

TEST_F(CounterSets, Implicants) {
  for (const auto& w : g.dg.accepted_words(2)) EXPECT_TRUE(is_implicant_bf(g, w));
  StateSet x = lift("Reset"), y = full(), z = lift("!Carry");
  EXPECT_TRUE(is_implicant_bf(g, {x, y, y, z}));
  EXPECT_FALSE(is_implicant_bf(g, {x, y, z}));
  EXPECT_FALSE(is_implicant_bf(g, {st({3})}));
  Budget tiny(10);
  EXPECT_THROW(is_implicant_bf(g, {x, y, y, z}, tiny), BudgetExceeded);
}

TEST_F(CounterSets, ImplicantIffTopLink) {
  StateSet x = lift("Reset"), y = full(), z = lift("!Carry");
  for (const SetSequence& a : {SetSequence{x, y, y, z}, SetSequence{x, y, z}, SetSequence{st({3})},
                               SetSequence{lift("Q0"), lift("Q0")}, SetSequence{y, y}}) {
    EXPECT_EQ(is_implicant_bf(g, a), is_link_bf(g, {Antichain::top(), a, Antichain::top()}));
  }
}

TEST_F(CounterSets, ElaborateImplicant) {
  Budget budget;
  StateSet x = lift("Reset"), y = full(), z = lift("!Carry");
  SetSequence alpha{y, x, y, y, z};
  auto e = elaborate_implicant(g, alpha, budget);
  ASSERT_TRUE(e);
  EXPECT_TRUE(is_elaboration(*e, g));
  EXPECT_TRUE(e->dg.accepts({x, y, y, z}));
  EXPECT_FALSE(elaborate_implicant(g, {x, y, z}, budget));
}

TEST_F(CounterSets, ElaborationWordsAreImplicants) {
  SetElaboration e = fig4();
  auto words = e.dg.accepted_words(8);
  ASSERT_EQ(words.size(), 2u);
  for (const auto& w : words) EXPECT_TRUE(is_implicant_bf(g, w));
}

}  // namespace
}  // namespace seqcal
