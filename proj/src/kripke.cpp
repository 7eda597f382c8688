#include "seqcal/kripke.hpp"

#include "seqcal/error.hpp"

namespace seqcal {

Kripke fully_populated(const Props& ap) {
  Kripke k;
  k.ap = ap;
  k.states = ap.state_count();
  for (std::size_t i = 0; i < ap.size(); ++i) k.labeling.push_back(atom_column(i, ap.size()));
  return k;
}

StateSet lift_expr(const Kripke& k, const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue: return StateSet::full(k.states);
    case K::kFalse: return StateSet(k.states);
    case K::kAtom: return k.labeling.at(k.ap.index_of(e.name()));
    case K::kNot: return ~lift_expr(k, e.children()[0]);
    case K::kAnd: {
      StateSet acc = StateSet::full(k.states);
      for (const Expr& c : e.children()) acc &= lift_expr(k, c);
      return acc;
    }
    case K::kOr: {
      StateSet acc(k.states);
      for (const Expr& c : e.children()) acc |= lift_expr(k, c);
      return acc;
    }
  }
  return StateSet(k.states);
}

SetSequence lift_seq(const Kripke& k, const std::vector<Expr>& alpha) {
  SetSequence out;
  out.reserve(alpha.size());
  for (const Expr& e : alpha) out.push_back(lift_expr(k, e));
  return out;
}

SetGraph lift_graph(const Kripke& k, const BooleanGraph& g) {
  SetGraph s;
  s.universe = k.states;
  for (const VertexId& v : g.dg.vertices()) s.dg.add_vertex(v);
  for (const auto& a : g.dg.arcs()) s.dg.add_arc(a.tail, lift_expr(k, a.label), a.head);
  return s;
}

bool holds_tightly(const std::vector<Expr>& alpha, const ElementSequence& omega,
                   const Kripke& k) {
  if (alpha.size() != omega.size()) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!lift_expr(k, alpha[i]).test(omega[i])) return false;
  return true;
}

MaximalBehaviors::MaximalBehaviors(const BooleanGraph& g, const Kripke& k, std::size_t n)
    : n_(n) {
  Budget budget;
  build(g, k, budget);
}

MaximalBehaviors::MaximalBehaviors(const BooleanGraph& g, const Kripke& k, std::size_t n,
                                   Budget& budget)
    : n_(n) {
  build(g, k, budget);
}

void MaximalBehaviors::build(const BooleanGraph& g, const Kripke& k, Budget& budget) {
  if (g.dg.vertex_count() > kMaxVertices)
    throw SizeLimitError("base graphs are limited to 64 vertices");
  SetGraph lifted = lift_graph(k, g);
  VertexSet terminal = kind_mask(lifted.dg, VertexKind::kTerminal);
  struct Step {
    VertexSet tail;
    bool tail_initial;
    VertexSet head;
    const StateSet* label;
  };
  std::vector<Step> steps;
  for (const auto& a : lifted.dg.arcs())
    steps.push_back({vbit(static_cast<unsigned>(a.tail)), lifted.dg.is_initial(a.tail),
                     vbit(static_cast<unsigned>(a.head)), &a.label});

  // `front` holds the graph vertices reached by reading some suffix of the
  // sequence from an initial vertex. Reaching a terminal vertex means an
  // accepted word holds tightly on that suffix.
  ElementSequence cur;
  auto dfs = [&](auto&& self, VertexSet front) -> void {
    if (cur.size() == n_) return;
    for (std::size_t s = 0; s < k.states; ++s) {
      budget.charge(1, "maximal_behaviors");
      VertexSet next = 0;
      for (const Step& st : steps)
        if (st.label->test(s) && (st.tail_initial || (st.tail & front))) next |= st.head;
      if (next & terminal) continue;
      cur.push_back(s);
      if (k.allows(cur)) {
        seqs_.push_back(cur);
        self(self, next);
      }
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  index_.insert(seqs_.begin(), seqs_.end());
}

std::vector<ElementSequence> maximal_behaviors(const BooleanGraph& g, const Kripke& k,
                                               std::size_t n) {
  return MaximalBehaviors(g, k, n).sequences();
}

bool is_constraint(const std::vector<Expr>& alpha, const MaximalBehaviors& behaviors,
                   const Kripke& k) {
  if (alpha.empty()) throw EmptyWordError();
  if (alpha.size() > behaviors.bound())
    throw Error("constraint is longer than the behavior bound");
  SetSequence lifted = lift_seq(k, alpha);
  for (const ElementSequence& omega : behaviors.sequences()) {
    if (omega.size() != alpha.size()) continue;
    bool inside = true;
    for (std::size_t i = 0; i < omega.size() && inside; ++i) inside = lifted[i].test(omega[i]);
    if (inside) return false;
  }
  return true;
}

bool is_constraint(const std::vector<Expr>& alpha, const BooleanGraph& g, const Kripke& k,
                   std::size_t n) {
  return is_constraint(alpha, MaximalBehaviors(g, k, n), k);
}

}  // namespace seqcal
