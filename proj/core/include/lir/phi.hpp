// Element colorings: one color from {1,2,3,4} per decomposition element so
// that the induced edge coloring is locally irregular, same-colored adjacent
// elements meet at a central vertex, the special element gets color 1, and
// the number of color-4 edges is minimum (certified by exhausted search).
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lir/decomposition.hpp"
#include "lir/multigraph.hpp"

namespace lir {

struct ElementColoring {
    std::vector<int> phi;  // per element, 1..4
    int color4_edge_count = 0;
    bool minimal4 = false;
};

ElementColoring find_phi(const Multigraph& g, const PertinentDecomposition& d);

// Non-throwing variant; empty when this decomposition admits no coloring.
std::optional<ElementColoring> try_find_phi(const Multigraph& g, const PertinentDecomposition& d);

// Not every strongly pertinent decomposition admits an element coloring, so
// the pipeline walks the candidates until one does. Throws when none works
// (the uncolorable family) .
std::pair<PertinentDecomposition, ElementColoring> decompose_and_color(const Multigraph& g);

// Edge coloring of simple g induced by phi (each element's edges get its color).
EdgeColoring induced_edge_coloring(const Multigraph& g, const PertinentDecomposition& d,
                                   const ElementColoring& phi);

// Shapes of monochromatic components under a valid phi; see the seven
// reference patterns in classify_shapes(). 'a'..'g', anything else throws.
struct MonoComponent {
    int color = 0;
    char shape = '?';
    std::vector<int> vertices;  // in g's numbering, sorted
};
std::vector<MonoComponent> classify_mono_components(const Multigraph& g,
                                                    const PertinentDecomposition& d,
                                                    const ElementColoring& phi);

}  // namespace lir
