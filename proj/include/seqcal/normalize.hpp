#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "seqcal/comb.hpp"
#include "seqcal/graphs.hpp"

namespace seqcal {

// <max+(g, aft, be), ~max+(g, aft, be)>
ElabVertex vertex_plus(const BooleanGraph& g, const Antichain& aft, const Expr& be);

struct NormalizeOptions {
  // Process pending arcs in a seeded random order instead of FIFO.
  std::optional<std::uint64_t> shuffle_seed;
  // Called after every worklist iteration with a text snapshot of the
  // working graph.
  std::function<void(std::size_t iteration, const std::string& snapshot)> trace;
};

struct NormalizeStats {
  std::size_t iterations = 0;
  std::size_t deleted = 0;  // arcs dropped because a terminal head could not be reached
  std::size_t copied = 0;   // arcs copied forward from a replaced head
};

// Turns the conjecture e into a forwards-maximal elaboration of g holding
// exactly the consequences of e that g supports. Conjecture vertices live in
// their own namespace, so any vertex names are accepted. The result has its
// vertices and arcs in canonical order and may be empty.
Elaboration normalize(const BooleanGraph& g, const BooleanGraph& e,
                      const NormalizeOptions& options = {}, NormalizeStats* stats = nullptr);

ElabCheck check_forwards_maximal(const Elaboration& e, const BooleanGraph& g);
bool is_forwards_maximal(const Elaboration& e, const BooleanGraph& g);

}  // namespace seqcal
