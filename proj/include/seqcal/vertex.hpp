#pragma once

#include <compare>
#include <string>

#include "seqcal/sos.hpp"

namespace seqcal {

// Compares strings with embedded digit runs numerically: v2 < v10.
std::strong_ordering natural_compare(const std::string& a, const std::string& b);

struct VertexId {
  std::string name;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    return natural_compare(a.name, b.name);
  }
};

// Vertex of an elaboration: an ordered pair of antichains over the interior
// vertices of the base graph.
struct ElabVertex {
  Antichain aft;
  Antichain fore;

  static ElabVertex initial() { return {Antichain::bottom(), Antichain::top()}; }
  static ElabVertex terminal() { return {Antichain::top(), Antichain::bottom()}; }
  static ElabVertex interior(unsigned v) {
    return {Antichain::singleton(vbit(v)), Antichain::singleton(vbit(v))};
  }

  friend bool operator==(const ElabVertex&, const ElabVertex&) = default;
  friend std::strong_ordering operator<=>(const ElabVertex&, const ElabVertex&) = default;
};

// <{{v6},{v9}}, {{v6,v9}}>
std::string render(const ElabVertex& v, const VertexNamer& name = default_vertex_name);
// {{v6},{v9}} / {{v6,v9}}
std::string render_slash(const ElabVertex& v, const VertexNamer& name = default_vertex_name);

}  // namespace seqcal
