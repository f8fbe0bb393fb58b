// Edge-to-path expansion: given a verified 2-coloring of ^2G and an edge uv
// between degree-3 vertices, replace uv by a path of length l >= 5 and
// extend the coloring without touching anything outside the path. The
// patterns split on whether uv was monochromatic (case 1, by l mod 4) or
// red-blue (subcases keyed on the red degrees of u and v).
#pragma once

#include <utility>

#include "lir/multigraph.hpp"

namespace lir {

// The alternating RR,RR,BB,BB,... pattern on a 2-multipath whose length is
// 2 mod 4; both end multiedges carry start_color.
EdgeColoring standard_path_coloring(int length, int start_color = RED);

enum class ExpansionBranch { Case1, Case21, Case22, Case23 };

struct ExpansionResult {
    Multigraph g;       // old vertices keep ids, path interior appended
    EdgeColoring c;
    ExpansionBranch branch;
};

ExpansionResult expand_edge_to_path(const Multigraph& g1, const EdgeColoring& c1,
                                    int u, int v, int length);

}  // namespace lir
