// Local-irregularity verification plus the two auxiliary invariants the
// subcubic constructions maintain. Constructor output is never trusted:
// everything gets re-checked here.
#pragma once

#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

struct Conflict {
    int u = 0, v = 0;  // u < v, adjacent in the color's subgraph
    int color = 0;
    bool operator==(const Conflict&) const = default;
};

struct ConflictReport {
    std::vector<Conflict> conflicts;  // exhaustive, sorted by (u, v, color)
    bool ok = false;                  // ok <=> conflicts empty
};

// A coloring is locally irregular when, for every color k and every pair of
// vertices joined by a copy of color k, the two k-degrees differ. Requires a
// total coloring.
ConflictReport verify(const Multigraph& g, const EdgeColoring& c);

struct DecompElement;
struct PertinentDecomposition;
struct ElementColoring;

// Property (P): no pendant vertex of an element colored 1, 2 or 3 reaches
// color degree five. The coloring may be partial outside those elements.
bool verify_property_P(const Multigraph& g2, const EdgeColoring& c,
                       const PertinentDecomposition& d, const ElementColoring& phi);

// No pendant multiedge colored red-blue may have an end vertex whose red and
// blue degrees are both three. A pendant multiedge is one incident to a
// vertex of multigraph-degree exactly two. Palette must be {1,2}.
bool verify_pendant_invariant(const Multigraph& g2, const EdgeColoring& c);

}  // namespace lir
