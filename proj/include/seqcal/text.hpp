#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcal/graphs.hpp"
#include "seqcal/logic.hpp"
#include "seqcal/resolution.hpp"

namespace seqcal {

// Line-oriented graph documents:
//
//   graph counter
//   props Q0 Q1 Reset Carry
//   vertex v18                      # only needed for vertices without arcs
//   arc v0 -> v1 : Reset & (Q0 | Q1)
//
// Elaboration documents use `elaboration <name>` and write each vertex as
// <aft, fore>, with vertex names resolved against a base graph:
//
//   arc <{}, {{}}> -> <{{v6},{v9}}, {{v6,v9}}> : Reset
//
// `#` starts a comment. Arc ids follow the order of the arc lines.

// Duplicate arcs are dropped; a note for each goes to `warnings` if given.
BooleanGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string render_graph(const BooleanGraph& g);

Elaboration parse_elaboration(std::string_view text, const BooleanGraph& base,
                              std::vector<std::string>* warnings = nullptr);
std::string render_elaboration(const Elaboration& e, const BooleanGraph& base);

// True when the document's first directive is `elaboration`.
bool is_elaboration_document(std::string_view text);

// Antichain and pair literals exactly as rendered, e.g. {{v6},{v12}} and
// <{{v6},{v9}}, {{v6,v9}}>. Names resolve to vertex indices of `base`.
Antichain parse_antichain(std::string_view text, const BooleanGraph& base);
ElabVertex parse_elab_vertex(std::string_view text, const BooleanGraph& base);

// Expressions separated by `;`. Throws EmptyWordError on a blank word.
BoolWord parse_word(std::string_view text);
std::string render_word_cli(const BoolWord& w);

// Resolution replay files, one step per line:
//   boolean k=0 p1=3 p2=2
//   disjunctive k=1 p1=0,5 p2=1,7
std::vector<ResolutionStep> parse_replay(std::string_view text);
std::string render_replay(const std::vector<ResolutionStep>& steps);

// Property files: `props <atoms...>` then `constraint <name> : <regex>` lines.
struct ConstraintDecl {
  std::string name;
  std::string regex;
  std::size_t line = 0;
};
struct ConstraintFile {
  Props ap;
  std::vector<ConstraintDecl> constraints;
};
ConstraintFile parse_scl(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace seqcal
