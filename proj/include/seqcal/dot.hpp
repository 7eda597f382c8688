#pragma once

#include <string>

#include "seqcal/graphs.hpp"

namespace seqcal {

// Graphviz text with nodes and edges in canonical order. Initial vertices are
// drawn as boxes and terminal ones as double circles.
std::string render_dot(const BooleanGraph& g);
// Pair vertices are labeled `{{v3},{v12}} / {{v3,v12}}`, names taken from base.
std::string render_dot(const Elaboration& e, const BooleanGraph& base);

}  // namespace seqcal
