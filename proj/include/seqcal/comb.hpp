#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcal/budget.hpp"
#include "seqcal/graphs.hpp"
#include "seqcal/sos.hpp"
#include "seqcal/state_set.hpp"

namespace seqcal {

using SetSequence = std::vector<StateSet>;
using ElementSequence = std::vector<std::size_t>;

// All sequences picking one element from each set, in lexicographic order.
std::vector<ElementSequence> cross_product(const SetSequence& alpha);
// Streams the same sequences; stop early by returning false.
void for_each_product(const SetSequence& alpha,
                      const std::function<bool(const ElementSequence&)>& fn);
std::size_t product_size(const SetSequence& alpha);

struct BinaryRelation {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct ProductTotality {
  bool total;                  // brute force: every (a, c) is related through some b
  bool antichain_inequality;   // leq(~first, second)
  Antichain first;             // min_incl of B_i whose R_AB-preimage is all of A
  Antichain first_complement;
  Antichain second;            // min_incl of B_j whose R_BC-image is all of C
};

// B = rab.codomain = rbc.domain, at most 12 elements.
ProductTotality product_total(const BinaryRelation& rab, const BinaryRelation& rbc);

struct CombLink {
  Antichain aft;
  SetSequence body;
  Antichain fore;
};

// Which of the four path properties some path of g satisfies for this
// (set_a, omega, set_f) case, as a mask with bit p-1 set for property p:
//   1: a subsequence of omega, initial tail, terminal head
//   2: a prefix, tail in set_a, terminal head
//   3: a suffix, initial tail, head in set_f
//   4: all of omega, tail in set_a, head in set_f
unsigned link_properties(const SetGraph& g, VertexSet set_a, const ElementSequence& omega,
                         VertexSet set_f);

bool is_link_bf(const SetGraph& g, const CombLink& l, Budget& budget);
bool is_link_bf(const SetGraph& g, const CombLink& l);

bool is_link1(const SetGraph& g, const Antichain& aft, const StateSet& d, const Antichain& fore);

// One link per arc, in arc order: {{}} at initial/terminal endpoints, {{v}}
// at an interior endpoint v.
std::vector<CombLink> initial_links(const SetGraph& g);

enum class MicroKind { kA, kB, kC };
// a: (aft join, intersection, fore meet); b: (meet, union, meet);
// c: (meet, intersection, join).
CombLink micro_infer(MicroKind kind, const CombLink& l1, const CombLink& l2);

// Greatest fore (resp. aft) making the triple a link. Length-1 steps search
// every U within IV(g), which must have at most 12 vertices; longer
// sequences fold step by step.
Antichain max_plus(const SetGraph& g, const Antichain& aft, const SetSequence& alpha);
Antichain max_minus(const SetGraph& g, const Antichain& fore, const SetSequence& alpha);
// The definition taken literally for any length: every U is tested with
// is_link_bf. Slow; used to certify the fold.
Antichain max_plus_bf(const SetGraph& g, const Antichain& aft, const SetSequence& alpha,
                      Budget& budget);
Antichain max_minus_bf(const SetGraph& g, const Antichain& fore, const SetSequence& alpha,
                       Budget& budget);

struct ElabCheck {
  bool ok = true;
  int condition = 0;  // first violated condition, 1..5; 0 when ok
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

ElabCheck check_elaboration(const SetElaboration& e, const SetGraph& g);
bool is_elaboration(const SetElaboration& e, const SetGraph& g);

// Does every omega in x alpha contain a contiguous piece lying in the product
// of some word accepted by g? Exhaustive over x alpha, with omegas that share
// a prefix and the same open paths checked once.
bool is_implicant_bf(const SetGraph& g, const SetSequence& alpha, Budget& budget);
bool is_implicant_bf(const SetGraph& g, const SetSequence& alpha);

// For an implicant alpha, a single-path elaboration of g accepting a shortest
// implicant piece of alpha, built from forwards-maximal links. nullopt if
// alpha is not an implicant.
std::optional<SetElaboration> elaborate_implicant(const SetGraph& g, const SetSequence& alpha,
                                                  Budget& budget);

std::string render(const CombLink& l, const VertexNamer& name = default_vertex_name);

}  // namespace seqcal
