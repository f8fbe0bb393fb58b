// Text format for edge colorings: a header line
//   lir-coloring v1 <n> <pairs> <palette>
// followed by one "u v copy color" line per colored copy, sorted by
// (u, v, copy), single spaces, LF line endings. Round trips are bit-exact.
#pragma once

#include <string>

#include "lir/multigraph.hpp"

namespace lir {

std::string emit_coloring(const Multigraph& g, const EdgeColoring& c);

// Errors name the offending 1-based line number.
EdgeColoring parse_coloring(const std::string& text, const Multigraph& g);

}  // namespace lir
