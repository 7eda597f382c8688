#include "seqcal/dot.hpp"

namespace seqcal {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class V, class L, class VName>
std::string dot_of(const std::string& name, const LabeledDigraph<V, L>& dg, VName&& vertex_label) {
  std::vector<std::size_t> order = dg.sorted_vertices();
  std::vector<std::size_t> node_of(dg.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) node_of[order[i]] = i;

  std::string out = "digraph " + quote(name.empty() ? "G" : name) + " {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    std::string shape = "ellipse";
    switch (dg.classify(v)) {
      case VertexKind::kInitial: shape = "box"; break;
      case VertexKind::kTerminal: shape = "doublecircle"; break;
      default: break;
    }
    out += "  n" + std::to_string(i) + " [label=" + quote(vertex_label(dg.vertex(v))) +
           ", shape=" + shape + "];\n";
  }
  for (std::size_t id : dg.sorted_arcs()) {
    const auto& a = dg.arc(id);
    out += "  n" + std::to_string(node_of[a.tail]) + " -> n" + std::to_string(node_of[a.head]) +
           " [label=" + quote(render(a.label)) + "];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string render_dot(const BooleanGraph& g) {
  return dot_of(g.name, g.dg, [](const VertexId& v) { return v.name; });
}

std::string render_dot(const Elaboration& e, const BooleanGraph& base) {
  VertexNamer name = base.namer();
  return dot_of(e.name, e.dg, [&](const ElabVertex& v) { return render_slash(v, name); });
}

}  // namespace seqcal
