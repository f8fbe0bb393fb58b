// Lifts a minimal element coloring of a subcubic graph to a locally
// irregular 3-coloring {red, green, blue} of its double: colors 1..3 double
// monochromatically, then each color-4 component (a path or a three-leg
// spider) is finished by the local rules keyed on its neighbor elements.
#pragma once

#include "lir/decomposition.hpp"
#include "lir/multigraph.hpp"
#include "lir/phi.hpp"

namespace lir {

// Requires every color-4 component of phi to be one of the two allowed
// shapes; throws otherwise (that indicates phi was not minimal).
EdgeColoring lift_double_3(const Multigraph& g, const PertinentDecomposition& d,
                           const ElementColoring& phi);

// Step one alone (monochromatic doubling of colors 1..3); exposed for tests
// of the parity invariant and property (P).
EdgeColoring lift_step1(const Multigraph& g, const PertinentDecomposition& d,
                        const ElementColoring& phi);

}  // namespace lir
