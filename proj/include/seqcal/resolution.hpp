#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqcal/graphs.hpp"

namespace seqcal {

// Image of g with initial vertices as <{},{{}}>, terminal ones as <{{}},{}>
// and each interior v as <{{v}},{{v}}>. Arc ids follow g's arc order.
Elaboration initial_elaboration(const BooleanGraph& g);

// <aft1 join aft2, fore1 meet fore2>
ElabVertex pre_vertex(const ElabVertex& a, const ElabVertex& b);
// <aft1 meet aft2, fore1 join fore2>
ElabVertex post_vertex(const ElabVertex& a, const ElabVertex& b);

enum class ResolutionMode { kDisjunctive, kBoolean };

// Paths are given as arc ids of the elaboration being resolved.
struct ResolutionStep {
  std::vector<std::size_t> path1;
  std::vector<std::size_t> path2;
  std::size_t k = 0;
  ResolutionMode mode = ResolutionMode::kDisjunctive;
};

// Adds the predecessor arcs (labels joined with &) before position k, the
// resolvent arc at k, and successor arcs (&) after it. The resolvent label is
// label1 | label2, or in boolean mode the consensus of two literal products
// that clash in exactly one atom.
//
// Throws RejectedResolution when the paths are malformed or when
// pre(tails) / post(heads) are not already vertices of e, and NoClashError
// when boolean mode finds no single clash. If `check_against` is given the
// result is re-validated as an elaboration of it.
Elaboration resolve(const Elaboration& e, const ResolutionStep& step,
                    const BooleanGraph* check_against = nullptr);

}  // namespace seqcal
