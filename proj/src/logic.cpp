#include "seqcal/logic.hpp"

#include <algorithm>
#include <bit>

#include "seqcal/error.hpp"
#include "seqcal/kripke.hpp"

namespace seqcal {

namespace {

struct ArcFacts {
  VertexSet tail_bit;
  VertexSet head_bit;
  bool tail_initial;
  bool head_terminal;
  const Expr* label;
};

std::vector<ArcFacts> arc_facts(const BooleanGraph& g) {
  if (g.dg.vertex_count() > kMaxVertices)
    throw SizeLimitError("base graphs are limited to 64 vertices");
  std::vector<ArcFacts> out;
  for (const auto& a : g.dg.arcs())
    out.push_back({vbit(static_cast<unsigned>(a.tail)), vbit(static_cast<unsigned>(a.head)),
                   g.dg.is_initial(a.tail), g.dg.is_terminal(a.head), &a.label});
  return out;
}

Expr qualifying_disjunction(const std::vector<ArcFacts>& arcs, VertexSet set_a,
                            VertexSet set_f) {
  std::vector<Expr> parts;
  for (const ArcFacts& a : arcs)
    if ((a.tail_initial || (a.tail_bit & set_a)) && (a.head_terminal || (a.head_bit & set_f)))
      parts.push_back(*a.label);
  return Expr::disj(std::move(parts));
}

bool logical_link(const BooleanGraph& g, const std::vector<ArcFacts>& arcs,
                  const Antichain& aft, const StateSet& be_states, const Antichain& fore) {
  for (VertexSet a : aft.sets())
    for (VertexSet f : fore.sets())
      if (!be_states.subset_of(denotation(qualifying_disjunction(arcs, a, f), g.ap)))
        return false;
  return true;
}

std::vector<VertexSet> subsets_of(VertexSet iv) {
  if (std::popcount(iv) > 12)
    throw SizeLimitError("max+/max- search is limited to 12 interior vertices");
  std::vector<VertexSet> out;
  for (VertexSet s = iv;; s = (s - 1) & iv) {
    out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

}  // namespace

bool is_logical_link(const BooleanGraph& g, const Antichain& aft, const Expr& be,
                     const Antichain& fore) {
  if (aft.is_bottom() || fore.is_bottom()) return true;
  return logical_link(g, arc_facts(g), aft, denotation(be, g.ap), fore);
}

bool is_link_logic(const BooleanGraph& g, const LogicLink& l, Budget& budget) {
  Kripke k = fully_populated(g.ap);
  return is_link_bf(lift_graph(k, g), CombLink{l.aft, lift_seq(k, l.body), l.fore}, budget);
}

bool is_link_logic(const BooleanGraph& g, const LogicLink& l) {
  Budget b;
  return is_link_logic(g, l, b);
}

std::vector<LogicLink> initial_logical_links(const BooleanGraph& g) {
  g.dg.require_no_isolated(g.namer());
  std::vector<LogicLink> out;
  for (const auto& a : g.dg.arcs()) {
    LogicLink l;
    l.aft = g.dg.is_initial(a.tail) ? Antichain::top()
                                    : Antichain::singleton(vbit(static_cast<unsigned>(a.tail)));
    l.fore = g.dg.is_terminal(a.head)
                 ? Antichain::top()
                 : Antichain::singleton(vbit(static_cast<unsigned>(a.head)));
    l.body = {a.label};
    out.push_back(std::move(l));
  }
  return out;
}

LogicLink micro_infer_logic(MicroKind kind, const LogicLink& l1, const LogicLink& l2) {
  if (l1.body.size() != 1 || l2.body.size() != 1)
    throw Error("micro inference takes links of length 1");
  const Expr& b1 = l1.body[0];
  const Expr& b2 = l2.body[0];
  switch (kind) {
    case MicroKind::kA: return {join(l1.aft, l2.aft), {b1 & b2}, meet(l1.fore, l2.fore)};
    case MicroKind::kB: return {meet(l1.aft, l2.aft), {b1 | b2}, meet(l1.fore, l2.fore)};
    case MicroKind::kC: return {meet(l1.aft, l2.aft), {b1 & b2}, join(l1.fore, l2.fore)};
  }
  throw Error("unknown micro inference kind");
}

Antichain max_plus_logic(const BooleanGraph& g, const Antichain& aft, const BoolWord& alpha) {
  if (alpha.empty()) throw EmptyWordError();
  auto arcs = arc_facts(g);
  auto us = subsets_of(g.interior_mask());
  Antichain cur = aft, result;
  for (const Expr& be : alpha) {
    StateSet d = denotation(be, g.ap);
    std::vector<VertexSet> found;
    for (VertexSet u : us)
      if (logical_link(g, arcs, cur, d, Antichain::singleton(u))) found.push_back(u);
    result = min_incl(std::move(found));
    cur = complement(result);
  }
  return result;
}

Antichain max_minus_logic(const BooleanGraph& g, const Antichain& fore, const BoolWord& alpha) {
  if (alpha.empty()) throw EmptyWordError();
  auto arcs = arc_facts(g);
  auto us = subsets_of(g.interior_mask());
  Antichain cur = fore, result;
  for (std::size_t i = alpha.size(); i-- > 0;) {
    StateSet d = denotation(alpha[i], g.ap);
    std::vector<VertexSet> found;
    for (VertexSet u : us)
      if (logical_link(g, arcs, Antichain::singleton(u), d, cur)) found.push_back(u);
    result = min_incl(std::move(found));
    cur = complement(result);
  }
  return result;
}

ElabCheck check_elaboration_logic(const Elaboration& e, const BooleanGraph& g) {
  VertexSet iv = g.interior_mask();
  VertexNamer name = g.namer();
  auto fail = [&](int cond, const std::string& msg) {
    return ElabCheck{false, cond, "condition " + std::to_string(cond) + ": " + msg};
  };
  for (const ElabVertex& v : e.dg.vertices())
    if (((v.aft.support() | v.fore.support()) & ~iv) != 0)
      return fail(1, render(v, name) + " mentions a vertex outside IV(G)");
  for (std::size_t i = 0; i < e.dg.vertex_count(); ++i) {
    const ElabVertex& v = e.dg.vertex(i);
    if (e.dg.is_initial(i) != v.aft.is_bottom())
      return fail(2, render(v, name) + (v.aft.is_bottom() ? " has aft {} but is not initial"
                                                          : " is initial but aft is not {}"));
  }
  for (std::size_t i = 0; i < e.dg.vertex_count(); ++i) {
    const ElabVertex& v = e.dg.vertex(i);
    if (e.dg.is_terminal(i) != v.fore.is_bottom())
      return fail(3, render(v, name) + (v.fore.is_bottom() ? " has fore {} but is not terminal"
                                                           : " is terminal but fore is not {}"));
  }
  for (const ElabVertex& v : e.dg.vertices())
    if (!leq(complement(v.aft), v.fore)) return fail(4, render(v, name) + " has ~aft > fore");
  auto arcs = arc_facts(g);
  for (std::size_t id = 0; id < e.dg.arc_count(); ++id) {
    const auto& a = e.dg.arc(id);
    const ElabVertex& t = e.dg.vertex(a.tail);
    const ElabVertex& h = e.dg.vertex(a.head);
    for (const std::string& atom : atoms_of(a.label))
      if (!g.ap.contains(atom)) return fail(5, "arc " + std::to_string(id) + " uses atom " + atom);
    if (!t.fore.is_bottom() && !h.aft.is_bottom() &&
        !logical_link(g, arcs, t.fore, denotation(a.label, g.ap), h.aft))
      return fail(5, "arc " + std::to_string(id) + " from " + render(t, name) + " to " +
                         render(h, name) + " labeled " + render(a.label) +
                         " is not a logical link");
  }
  return {};
}

bool is_elaboration_logic(const Elaboration& e, const BooleanGraph& g) {
  return check_elaboration_logic(e, g).ok;
}

bool is_implicant_logic(const BooleanGraph& g, const BoolWord& alpha, Budget& budget) {
  Kripke k = fully_populated(g.ap);
  return is_implicant_bf(lift_graph(k, g), lift_seq(k, alpha), budget);
}

bool is_implicant_logic(const BooleanGraph& g, const BoolWord& alpha) {
  Budget b;
  return is_implicant_logic(g, alpha, b);
}

std::function<bool(const Expr&, const Expr&)> semantic_eq(const Props& ap) {
  return [ap](const Expr& a, const Expr& b) { return a == b || equivalent(a, b, ap); };
}

std::string render_word(const BoolWord& w) {
  std::string out = "<";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += render(w[i]);
  }
  return out + ">";
}

std::string render(const LogicLink& l, const VertexNamer& name) {
  return "<" + render(l.aft, name) + ", " + render_word(l.body) + ", " + render(l.fore, name) +
         ">";
}

}  // namespace seqcal
