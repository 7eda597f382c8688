#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "seqcal/boolexpr.hpp"
#include "seqcal/digraph.hpp"
#include "seqcal/sos.hpp"
#include "seqcal/state_set.hpp"
#include "seqcal/vertex.hpp"

namespace seqcal {

// In a base graph the vertex at index i is bit i of every VertexSet, so base
// graphs are built with their vertices inserted in natural name order.

struct BooleanGraph {
  std::string name;
  Props ap;
  LabeledDigraph<VertexId, Expr> dg;

  VertexNamer namer() const;
  // IV(G) as a bit mask. Throws SizeLimitError past 64 vertices.
  VertexSet interior_mask() const;
};

struct SetGraph {
  std::size_t universe = 0;
  LabeledDigraph<VertexId, StateSet> dg;

  VertexNamer namer() const;
  VertexSet interior_mask() const;
};

// Elaboration at the logic level: vertices are <aft, fore> pairs over the
// base graph's interior vertices.
struct Elaboration {
  std::string name;
  Props ap;
  LabeledDigraph<ElabVertex, Expr> dg;
};

struct SetElaboration {
  std::size_t universe = 0;
  LabeledDigraph<ElabVertex, StateSet> dg;
};

using ArcSpec = std::tuple<std::string, Expr, std::string>;
using SetArcSpec = std::tuple<std::string, StateSet, std::string>;

// Vertices are the arc endpoints plus `extra_vertices`, inserted in natural
// order; arcs keep the given order. Throws UndefinedAtomError when a label
// uses an atom outside `ap`.
BooleanGraph make_boolean_graph(std::string name, Props ap, const std::vector<ArcSpec>& arcs,
                                const std::vector<std::string>& extra_vertices = {});
SetGraph make_set_graph(std::size_t universe, const std::vector<SetArcSpec>& arcs,
                        const std::vector<std::string>& extra_vertices = {});

template <class V, class L>
VertexSet kind_mask(const LabeledDigraph<V, L>& dg, VertexKind k) {
  if (dg.vertex_count() > kMaxVertices)
    throw SizeLimitError("base graphs are limited to 64 vertices");
  VertexSet m = 0;
  for (std::size_t v = 0; v < dg.vertex_count(); ++v)
    if (dg.classify(v) == k) m |= vbit(static_cast<unsigned>(v));
  return m;
}

// Names as s0, s1, ...
std::string render_states(const StateSet& s);

}  // namespace seqcal
