#include "seqcal/graphs.hpp"

#include <algorithm>
#include <set>

namespace seqcal {

namespace {

template <class Graph>
VertexNamer namer_of(const Graph& g) {
  return [&g](unsigned i) {
    return i < g.dg.vertex_count() ? g.dg.vertex(i).name : default_vertex_name(i);
  };
}

std::vector<VertexId> natural_vertices(const std::vector<std::string>& endpoints) {
  std::set<VertexId> names;
  for (const std::string& n : endpoints) names.insert(VertexId{n});
  return {names.begin(), names.end()};
}

}  // namespace

VertexNamer BooleanGraph::namer() const { return namer_of(*this); }
VertexSet BooleanGraph::interior_mask() const { return kind_mask(dg, VertexKind::kInterior); }

VertexNamer SetGraph::namer() const { return namer_of(*this); }
VertexSet SetGraph::interior_mask() const { return kind_mask(dg, VertexKind::kInterior); }

BooleanGraph make_boolean_graph(std::string name, Props ap, const std::vector<ArcSpec>& arcs,
                                const std::vector<std::string>& extra_vertices) {
  BooleanGraph g{std::move(name), std::move(ap), {}};
  std::vector<std::string> ends = extra_vertices;
  for (const auto& [t, e, h] : arcs) {
    for (const std::string& atom : atoms_of(e)) g.ap.index_of(atom);
    ends.push_back(t);
    ends.push_back(h);
  }
  for (const VertexId& v : natural_vertices(ends)) g.dg.add_vertex(v);
  for (const auto& [t, e, h] : arcs) g.dg.add_arc(VertexId{t}, e, VertexId{h});
  return g;
}

SetGraph make_set_graph(std::size_t universe, const std::vector<SetArcSpec>& arcs,
                        const std::vector<std::string>& extra_vertices) {
  SetGraph g;
  g.universe = universe;
  std::vector<std::string> ends = extra_vertices;
  for (const auto& [t, d, h] : arcs) {
    if (d.universe() != universe) throw Error("arc label over a different element universe");
    ends.push_back(t);
    ends.push_back(h);
  }
  for (const VertexId& v : natural_vertices(ends)) g.dg.add_vertex(v);
  for (const auto& [t, d, h] : arcs) g.dg.add_arc(VertexId{t}, d, VertexId{h});
  return g;
}

std::string render_states(const StateSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t m : s.members()) {
    if (!first) out += ',';
    first = false;
    out += "s" + std::to_string(m);
  }
  return out + "}";
}

}  // namespace seqcal
