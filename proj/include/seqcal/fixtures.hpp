#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqcal/comb.hpp"
#include "seqcal/graphs.hpp"
#include "seqcal/resolution.hpp"
#include "seqcal/text.hpp"

// Worked examples shipped with the tool. The graph documents are the files
// under data/, compiled in.
namespace seqcal::fixtures {

// File name and contents of every shipped document.
const std::vector<std::pair<std::string, std::string_view>>& shipped_files();
// Throws Error for an unknown name.
std::string_view shipped(std::string_view file_name);

// Two-bit counter over Q0 Q1 Reset Carry, 18 vertices, 11 arcs.
BooleanGraph counter();
// The same constraints at the set level over the 16 states s0..s15.
SetGraph counter_sets();
// w0 -Reset-> u1, u1 -true-> u1, u1 -!Carry-> u2.
BooleanGraph carry_conjecture();
// The six-vertex forwards-maximal elaboration of counter().
Elaboration counter_normalized();

// v0 -P-> v1 -!Q-> v2, v3 -R-> v4 -!S-> v5, v6 -Q&S-> v7 -!T-> v8.
BooleanGraph resolution_example();
std::vector<ResolutionStep> resolution_replay();
// v0 -P&Q-> v1 -!Q-> v2.
BooleanGraph induction_example();
std::vector<ResolutionStep> induction_replay();

// Relation pairs for the composite-totality examples over A, B, C of size
// 2/3/3 (not total) and 3/3/3 (total).
struct RelationPair {
  BinaryRelation rab;
  BinaryRelation rbc;
};
RelationPair composite_not_total();
RelationPair composite_total();

ConstraintFile paper_constraints();

}  // namespace seqcal::fixtures
