#pragma once

#include <string>

#include "fograph/graph.hpp"

namespace fograph {

// graph6 encoding per the published format: N(n) followed by the upper
// triangle in column-major order, 6 bits per printable byte (offset 63).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// Edge-list fallback: one "u v" pair per line, 0-indexed; an optional first
// line "n <order>" pins isolated trailing vertices.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

}  // namespace fograph
