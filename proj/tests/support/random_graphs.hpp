#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqcal/graphs.hpp"
#include "seqcal/logic.hpp"

namespace seqcal::testing {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

Props random_props(Rng& rng, std::size_t max_atoms = 3);

// Literal, small conjunction/disjunction of literals, or occasionally true.
Expr random_expr(Rng& rng, const Props& ap);
// A product of distinct literals over ap (possibly the empty product true).
Expr random_product(Rng& rng, const Props& ap, std::size_t max_literals = 2);
BoolWord random_word(Rng& rng, const Props& ap, std::size_t min_len, std::size_t max_len);

struct GraphOptions {
  std::size_t max_interior = 3;
  std::size_t extra_arcs = 3;
  bool literal_labels = false;  // products only, for boolean resolution
  bool allow_cycles = true;     // interior self-loops and back arcs
};

// A Boolean graph with 1-2 initial, 1..max_interior interior and 1-2 terminal
// vertices, no isolated ones, initial vertices without incoming arcs and
// terminal ones without outgoing arcs.
BooleanGraph random_graph(Rng& rng, const Props& ap, const GraphOptions& opt = {});

StateSet random_states(Rng& rng, std::size_t universe, bool non_empty = true);
SetSequence random_set_word(Rng& rng, std::size_t universe, std::size_t min_len,
                            std::size_t max_len);

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

// Random element of SoS(universe) below (or above) a bound.
Antichain random_below(Rng& rng, VertexSet universe, const Antichain& bound);
Antichain random_above(Rng& rng, VertexSet universe, const Antichain& bound);

}  // namespace seqcal::testing
