// Standard graph6 wire format for simple graphs.
#pragma once

#include <string>

#include "lir/multigraph.hpp"

namespace lir {

// Accepts an optional ">>graph6<<" prefix. Parse errors name the byte offset.
Multigraph parse_graph6(const std::string& text);

std::string emit_graph6(const Multigraph& g);  // requires a simple graph

}  // namespace lir
