#include "seqcal/comb.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "seqcal/error.hpp"

namespace seqcal {

// ---- products ---------------------------------------------------------------

std::size_t product_size(const SetSequence& alpha) {
  std::size_t n = 1;
  for (const StateSet& s : alpha) {
    std::size_t c = s.count();
    if (c == 0) return 0;
    if (n > SIZE_MAX / c) return SIZE_MAX;
    n *= c;
  }
  return n;
}

void for_each_product(const SetSequence& alpha,
                      const std::function<bool(const ElementSequence&)>& fn) {
  std::vector<std::vector<std::size_t>> choices;
  for (const StateSet& s : alpha) {
    choices.push_back(s.members());
    if (choices.back().empty()) return;
  }
  std::vector<std::size_t> idx(alpha.size(), 0);
  ElementSequence omega(alpha.size());
  while (true) {
    for (std::size_t i = 0; i < alpha.size(); ++i) omega[i] = choices[i][idx[i]];
    if (!fn(omega)) return;
    std::size_t i = alpha.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (alpha.empty()) return;
  }
}

std::vector<ElementSequence> cross_product(const SetSequence& alpha) {
  std::vector<ElementSequence> out;
  for_each_product(alpha, [&](const ElementSequence& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

ProductTotality product_total(const BinaryRelation& rab, const BinaryRelation& rbc) {
  if (rab.codomain != rbc.domain) throw Error("relations do not share the middle set");
  std::size_t nb = rab.codomain;
  if (nb > 12) throw SizeLimitError("product_total is limited to |B| <= 12");
  std::size_t na = rab.domain, nc = rbc.codomain;

  std::vector<std::vector<char>> ab(na, std::vector<char>(nb, 0));
  std::vector<std::vector<char>> bc(nb, std::vector<char>(nc, 0));
  for (auto [a, b] : rab.pairs) ab.at(a).at(b) = 1;
  for (auto [b, c] : rbc.pairs) bc.at(b).at(c) = 1;

  bool total = true;
  for (std::size_t a = 0; a < na && total; ++a)
    for (std::size_t c = 0; c < nc && total; ++c) {
      bool linked = false;
      for (std::size_t b = 0; b < nb && !linked; ++b) linked = ab[a][b] && bc[b][c];
      total = linked;
    }

  std::vector<VertexSet> covers_a, covers_c;
  for (VertexSet bs = 0; bs < (VertexSet{1} << nb); ++bs) {
    bool all_a = true;
    for (std::size_t a = 0; a < na && all_a; ++a) {
      bool hit = false;
      for (std::size_t b = 0; b < nb && !hit; ++b) hit = ((bs >> b) & 1) && ab[a][b];
      all_a = hit;
    }
    if (all_a) covers_a.push_back(bs);
    bool all_c = true;
    for (std::size_t c = 0; c < nc && all_c; ++c) {
      bool hit = false;
      for (std::size_t b = 0; b < nb && !hit; ++b) hit = ((bs >> b) & 1) && bc[b][c];
      all_c = hit;
    }
    if (all_c) covers_c.push_back(bs);
  }
  ProductTotality r{total, false, min_incl(covers_a), {}, min_incl(covers_c)};
  r.first_complement = complement(r.first);
  r.antichain_inequality = leq(r.first_complement, r.second);
  return r;
}

// ---- links ------------------------------------------------------------------

namespace {

// Per-graph arc facts as bit masks, reused across the link checks.
struct ArcTable {
  struct Entry {
    VertexSet tail_bit;
    VertexSet head_bit;
    bool tail_initial;
    bool head_terminal;
    const StateSet* label;
  };
  std::vector<Entry> arcs;
  VertexSet terminal = 0;

  explicit ArcTable(const SetGraph& g) {
    if (g.dg.vertex_count() > kMaxVertices)
      throw SizeLimitError("base graphs are limited to 64 vertices");
    for (const auto& a : g.dg.arcs())
      arcs.push_back({vbit(static_cast<unsigned>(a.tail)), vbit(static_cast<unsigned>(a.head)),
                      g.dg.is_initial(a.tail), g.dg.is_terminal(a.head), &a.label});
    terminal = kind_mask(g.dg, VertexKind::kTerminal);
  }

  // Union of labels over arcs leaving an initial vertex or set_a and entering
  // a terminal vertex or set_f.
  StateSet reach(std::size_t universe, VertexSet set_a, VertexSet set_f) const {
    StateSet u(universe);
    for (const Entry& e : arcs)
      if ((e.tail_initial || (e.tail_bit & set_a)) && (e.head_terminal || (e.head_bit & set_f)))
        u |= *e.label;
    return u;
  }
};

unsigned properties(const ArcTable& t, VertexSet set_a, const ElementSequence& omega,
                    VertexSet set_f) {
  unsigned props = 0;
  VertexSet f1 = 0, f2 = set_a;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    VertexSet n1 = 0, n2 = 0;
    for (const auto& e : t.arcs) {
      if (!e.label->test(omega[i])) continue;
      if (e.tail_initial || (e.tail_bit & f1)) n1 |= e.head_bit;
      if (e.tail_bit & f2) n2 |= e.head_bit;
    }
    f1 = n1;
    f2 = n2;
    if (f1 & t.terminal) props |= 1u;
    if (f2 & t.terminal) props |= 2u;
  }
  if (f1 & set_f) props |= 4u;
  if (f2 & set_f) props |= 8u;
  return props;
}

void check_elements(const SetGraph& g, const ElementSequence& omega) {
  for (std::size_t e : omega)
    if (e >= g.universe) throw Error("element outside the graph's universe");
}

}  // namespace

unsigned link_properties(const SetGraph& g, VertexSet set_a, const ElementSequence& omega,
                         VertexSet set_f) {
  if (omega.empty()) throw EmptyWordError();
  check_elements(g, omega);
  return properties(ArcTable(g), set_a, omega, set_f);
}

bool is_link_bf(const SetGraph& g, const CombLink& l, Budget& budget) {
  if (l.body.empty()) throw EmptyWordError();
  if (l.aft.is_bottom() || l.fore.is_bottom()) return true;
  ArcTable t(g);
  bool ok = true;
  for_each_product(l.body, [&](const ElementSequence& omega) {
    budget.charge(l.aft.size() * l.fore.size(), "is_link_bf");
    for (VertexSet a : l.aft.sets())
      for (VertexSet f : l.fore.sets())
        if (properties(t, a, omega, f) == 0) {
          ok = false;
          return false;
        }
    return true;
  });
  return ok;
}

bool is_link_bf(const SetGraph& g, const CombLink& l) {
  Budget b;
  return is_link_bf(g, l, b);
}

bool is_link1(const SetGraph& g, const Antichain& aft, const StateSet& d,
              const Antichain& fore) {
  ArcTable t(g);
  for (VertexSet a : aft.sets())
    for (VertexSet f : fore.sets())
      if (!d.subset_of(t.reach(g.universe, a, f))) return false;
  return true;
}

std::vector<CombLink> initial_links(const SetGraph& g) {
  g.dg.require_no_isolated(g.namer());
  std::vector<CombLink> out;
  for (const auto& a : g.dg.arcs()) {
    CombLink l;
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

CombLink micro_infer(MicroKind kind, const CombLink& l1, const CombLink& l2) {
  if (l1.body.size() != 1 || l2.body.size() != 1)
    throw Error("micro inference takes links of length 1");
  const StateSet& d1 = l1.body[0];
  const StateSet& d2 = l2.body[0];
  switch (kind) {
    case MicroKind::kA: return {join(l1.aft, l2.aft), {d1 & d2}, meet(l1.fore, l2.fore)};
    case MicroKind::kB: return {meet(l1.aft, l2.aft), {d1 | d2}, meet(l1.fore, l2.fore)};
    case MicroKind::kC: return {meet(l1.aft, l2.aft), {d1 & d2}, join(l1.fore, l2.fore)};
  }
  throw Error("unknown micro inference kind");
}

// ---- max+ / max- ------------------------------------------------------------

namespace {

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

Antichain max_plus1(const SetGraph& g, const ArcTable& t, const std::vector<VertexSet>& us,
                    const Antichain& aft, const StateSet& d) {
  std::vector<VertexSet> found;
  for (VertexSet u : us) {
    bool ok = std::all_of(aft.sets().begin(), aft.sets().end(), [&](VertexSet a) {
      return d.subset_of(t.reach(g.universe, a, u));
    });
    if (ok) found.push_back(u);
  }
  return min_incl(std::move(found));
}

Antichain max_minus1(const SetGraph& g, const ArcTable& t, const std::vector<VertexSet>& us,
                     const Antichain& fore, const StateSet& d) {
  std::vector<VertexSet> found;
  for (VertexSet u : us) {
    bool ok = std::all_of(fore.sets().begin(), fore.sets().end(), [&](VertexSet f) {
      return d.subset_of(t.reach(g.universe, u, f));
    });
    if (ok) found.push_back(u);
  }
  return min_incl(std::move(found));
}

}  // namespace

Antichain max_plus(const SetGraph& g, const Antichain& aft, const SetSequence& alpha) {
  if (alpha.empty()) throw EmptyWordError();
  ArcTable t(g);
  std::vector<VertexSet> us = subsets_of(g.interior_mask());
  Antichain cur = aft, result;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    result = max_plus1(g, t, us, cur, alpha[i]);
    cur = complement(result);
  }
  return result;
}

Antichain max_minus(const SetGraph& g, const Antichain& fore, const SetSequence& alpha) {
  if (alpha.empty()) throw EmptyWordError();
  ArcTable t(g);
  std::vector<VertexSet> us = subsets_of(g.interior_mask());
  Antichain cur = fore, result;
  for (std::size_t i = alpha.size(); i-- > 0;) {
    result = max_minus1(g, t, us, cur, alpha[i]);
    cur = complement(result);
  }
  return result;
}

Antichain max_plus_bf(const SetGraph& g, const Antichain& aft, const SetSequence& alpha,
                      Budget& budget) {
  std::vector<VertexSet> found;
  for (VertexSet u : subsets_of(g.interior_mask()))
    if (is_link_bf(g, CombLink{aft, alpha, Antichain::singleton(u)}, budget)) found.push_back(u);
  return min_incl(std::move(found));
}

Antichain max_minus_bf(const SetGraph& g, const Antichain& fore, const SetSequence& alpha,
                       Budget& budget) {
  std::vector<VertexSet> found;
  for (VertexSet u : subsets_of(g.interior_mask()))
    if (is_link_bf(g, CombLink{Antichain::singleton(u), alpha, fore}, budget)) found.push_back(u);
  return min_incl(std::move(found));
}

// ---- elaborations -----------------------------------------------------------

ElabCheck check_elaboration(const SetElaboration& e, const SetGraph& g) {
  VertexSet iv = g.interior_mask();
  VertexNamer name = g.namer();
  auto fail = [&](int cond, const std::string& msg) {
    return ElabCheck{false, cond, "condition " + std::to_string(cond) + ": " + msg};
  };
  for (std::size_t i = 0; i < e.dg.vertex_count(); ++i) {
    const ElabVertex& v = e.dg.vertex(i);
    if (((v.aft.support() | v.fore.support()) & ~iv) != 0)
      return fail(1, render(v, name) + " mentions a vertex outside IV(G)");
  }
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
  for (std::size_t i = 0; i < e.dg.vertex_count(); ++i) {
    const ElabVertex& v = e.dg.vertex(i);
    if (!leq(complement(v.aft), v.fore)) return fail(4, render(v, name) + " has ~aft > fore");
  }
  for (std::size_t id = 0; id < e.dg.arc_count(); ++id) {
    const auto& a = e.dg.arc(id);
    const ElabVertex& t = e.dg.vertex(a.tail);
    const ElabVertex& h = e.dg.vertex(a.head);
    if (!is_link1(g, t.fore, a.label, h.aft))
      return fail(5, "arc " + std::to_string(id) + " from " + render(t, name) + " to " +
                         render(h, name) + " is not a link of length 1");
  }
  return {};
}

bool is_elaboration(const SetElaboration& e, const SetGraph& g) {
  return check_elaboration(e, g).ok;
}

// ---- implicants -------------------------------------------------------------

bool is_implicant_bf(const SetGraph& g, const SetSequence& alpha, Budget& budget) {
  if (alpha.empty()) throw EmptyWordError();
  ArcTable t(g);
  // Walks every omega position by position. Prefixes that leave the same set
  // of open path heads behave identically from then on, so each layer keeps
  // one entry per distinct frontier; prefixes already covered by an accepted
  // word are dropped. Whatever survives the last layer is an uncovered omega.
  std::set<VertexSet> layer{0};
  for (const StateSet& d : alpha) {
    std::set<VertexSet> next;
    std::vector<std::size_t> elems = d.members();
    for (VertexSet f : layer) {
      budget.charge(elems.size() * t.arcs.size() + 1, "is_implicant_bf");
      for (std::size_t e : elems) {
        VertexSet n = 0;
        for (const auto& a : t.arcs)
          if (a.label->test(e) && (a.tail_initial || (a.tail_bit & f))) n |= a.head_bit;
        if ((n & t.terminal) == 0) next.insert(n);
      }
    }
    if (next.empty()) return true;
    layer = std::move(next);
  }
  return false;
}

bool is_implicant_bf(const SetGraph& g, const SetSequence& alpha) {
  Budget b;
  return is_implicant_bf(g, alpha, b);
}

std::optional<SetElaboration> elaborate_implicant(const SetGraph& g, const SetSequence& alpha,
                                                  Budget& budget) {
  for (std::size_t len = 1; len <= alpha.size(); ++len) {
    for (std::size_t start = 0; start + len <= alpha.size(); ++start) {
      SetSequence piece(alpha.begin() + static_cast<std::ptrdiff_t>(start),
                        alpha.begin() + static_cast<std::ptrdiff_t>(start + len));
      if (!is_implicant_bf(g, piece, budget)) continue;
      SetElaboration e;
      e.universe = g.universe;
      ElabVertex cur = ElabVertex::initial();
      for (const StateSet& d : piece) {
        Antichain aft = max_plus(g, cur.fore, {d});
        ElabVertex next{aft, complement(aft)};
        e.dg.add_arc(cur, d, next);
        cur = next;
      }
      return e;
    }
  }
  return std::nullopt;
}

std::string render(const CombLink& l, const VertexNamer& name) {
  std::string out = "<" + render(l.aft, name) + ", <";
  for (std::size_t i = 0; i < l.body.size(); ++i) {
    if (i) out += ", ";
    out += render_states(l.body[i]);
  }
  return out + ">, " + render(l.fore, name) + ">";
}

}  // namespace seqcal
