#include "seqcal/resolution.hpp"

#include "seqcal/error.hpp"
#include "seqcal/logic.hpp"

namespace seqcal {

Elaboration initial_elaboration(const BooleanGraph& g) {
  g.dg.require_no_isolated(g.namer());
  Elaboration e{g.name.empty() ? "elaboration" : g.name + "-elab", g.ap, {}};
  auto image = [&](std::size_t v) {
    switch (g.dg.classify(v)) {
      case VertexKind::kInitial: return ElabVertex::initial();
      case VertexKind::kTerminal: return ElabVertex::terminal();
      default: return ElabVertex::interior(static_cast<unsigned>(v));
    }
  };
  for (const auto& a : g.dg.arcs()) e.dg.add_arc(image(a.tail), a.label, image(a.head));
  return e;
}

ElabVertex pre_vertex(const ElabVertex& a, const ElabVertex& b) {
  return {join(a.aft, b.aft), meet(a.fore, b.fore)};
}

ElabVertex post_vertex(const ElabVertex& a, const ElabVertex& b) {
  return {meet(a.aft, b.aft), join(a.fore, b.fore)};
}

namespace {

void check_path(const Elaboration& e, const std::vector<std::size_t>& path, const char* which) {
  if (path.empty()) throw RejectedResolution(std::string(which) + " is empty");
  for (std::size_t id : path)
    if (id >= e.dg.arc_count())
      throw RejectedResolution(std::string(which) + " names unknown arc " + std::to_string(id));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (e.dg.arc(path[i]).head != e.dg.arc(path[i + 1]).tail)
      throw RejectedResolution(std::string(which) + " is not a path: arc " +
                               std::to_string(path[i]) + " does not end where arc " +
                               std::to_string(path[i + 1]) + " starts");
}

}  // namespace

Elaboration resolve(const Elaboration& e, const ResolutionStep& step,
                    const BooleanGraph* check_against) {
  check_path(e, step.path1, "path1");
  check_path(e, step.path2, "path2");
  if (step.path1.size() != step.path2.size())
    throw RejectedResolution("paths have different lengths");
  if (step.k >= step.path1.size()) throw RejectedResolution("pivot index out of range");

  auto tail_of = [&](std::size_t id) -> const ElabVertex& {
    return e.dg.vertex(e.dg.arc(id).tail);
  };
  auto head_of = [&](std::size_t id) -> const ElabVertex& {
    return e.dg.vertex(e.dg.arc(id).head);
  };

  ElabVertex first = pre_vertex(tail_of(step.path1.front()), tail_of(step.path2.front()));
  ElabVertex last = post_vertex(head_of(step.path1.back()), head_of(step.path2.back()));
  if (!e.dg.has_vertex(first))
    throw RejectedResolution("pre of the path tails, " + render(first) +
                             ", is not a vertex of the elaboration");
  if (!e.dg.has_vertex(last))
    throw RejectedResolution("post of the path heads, " + render(last) +
                             ", is not a vertex of the elaboration");

  Expr pivot;
  const Expr& l1 = e.dg.arc(step.path1[step.k]).label;
  const Expr& l2 = e.dg.arc(step.path2[step.k]).label;
  if (step.mode == ResolutionMode::kBoolean) {
    auto p1 = literal_product(l1);
    auto p2 = literal_product(l2);
    if (!p1 || !p2)
      throw NoClashError("boolean resolution needs literal products, got " + render(l1) +
                         " and " + render(l2));
    auto r = boolean_resolvent(*p1, *p2);
    if (!r)
      throw NoClashError(render(l1) + " and " + render(l2) +
                         " do not clash in exactly one atom");
    pivot = r->expr;
  } else {
    pivot = l1 | l2;
  }

  Elaboration out = e;
  for (std::size_t i = 0; i < step.path1.size(); ++i) {
    std::size_t a1 = step.path1[i], a2 = step.path2[i];
    bool tail_pre = i <= step.k;
    bool head_pre = i < step.k;
    ElabVertex t = tail_pre ? pre_vertex(tail_of(a1), tail_of(a2))
                            : post_vertex(tail_of(a1), tail_of(a2));
    ElabVertex h = head_pre ? pre_vertex(head_of(a1), head_of(a2))
                            : post_vertex(head_of(a1), head_of(a2));
    Expr label = i == step.k ? pivot : e.dg.arc(a1).label & e.dg.arc(a2).label;
    out.dg.add_arc(t, std::move(label), h);
  }

  if (check_against != nullptr) {
    ElabCheck c = check_elaboration_logic(out, *check_against);
    if (!c.ok) throw Error("resolution broke the elaboration: " + c.diagnostic);
  }
  return out;
}

}  // namespace seqcal
