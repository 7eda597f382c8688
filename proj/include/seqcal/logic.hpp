#pragma once

#include <string>
#include <vector>

#include "seqcal/boolexpr.hpp"
#include "seqcal/budget.hpp"
#include "seqcal/comb.hpp"
#include "seqcal/graphs.hpp"

namespace seqcal {

using BoolWord = std::vector<Expr>;

struct LogicLink {
  Antichain aft;
  BoolWord body;
  Antichain fore;
};

// For every set_a and set_f, be implies the disjunction of the labels of arcs
// leaving an initial vertex or set_a and entering a terminal vertex or set_f
// (false when there are none).
bool is_logical_link(const BooleanGraph& g, const Antichain& aft, const Expr& be,
                     const Antichain& fore);

// General link, decided on the fully populated structure.
bool is_link_logic(const BooleanGraph& g, const LogicLink& l, Budget& budget);
bool is_link_logic(const BooleanGraph& g, const LogicLink& l);

std::vector<LogicLink> initial_logical_links(const BooleanGraph& g);

LogicLink micro_infer_logic(MicroKind kind, const LogicLink& l1, const LogicLink& l2);

// Length-1 steps search every U within IV(g) with is_logical_link; longer
// words fold as at the set level.
Antichain max_plus_logic(const BooleanGraph& g, const Antichain& aft, const BoolWord& alpha);
Antichain max_minus_logic(const BooleanGraph& g, const Antichain& fore, const BoolWord& alpha);

ElabCheck check_elaboration_logic(const Elaboration& e, const BooleanGraph& g);
bool is_elaboration_logic(const Elaboration& e, const BooleanGraph& g);

// Lifts to the fully populated structure over g.ap and asks the set-level
// oracle.
bool is_implicant_logic(const BooleanGraph& g, const BoolWord& alpha, Budget& budget);
bool is_implicant_logic(const BooleanGraph& g, const BoolWord& alpha);

// Label equality by denotation instead of structure.
std::function<bool(const Expr&, const Expr&)> semantic_eq(const Props& ap);

std::string render(const LogicLink& l, const VertexNamer& name = default_vertex_name);
std::string render_word(const BoolWord& w);

}  // namespace seqcal
