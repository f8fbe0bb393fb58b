// Locally irregular 2-coloring of ^2G for connected subcubic G whose
// degree-3 vertices form an independent set, built by the reduction scheme:
// direct base colorings, pendant star-like subgraph removal, pendant path
// removal (four boundary cases), pendant triangle and pendant 4-cycle
// removal, the adjacent-degree-2 reduction resolved through the precomputed
// case table, and the subdivided-cubic base handled as a bipartite search.
// Every unwind re-verifies the partial result and the pendant invariant.
#pragma once

#include "lir/casetable.hpp"
#include "lir/multigraph.hpp"

namespace lir {

// g must be connected, different from K2, subcubic, with pairwise
// non-adjacent degree-3 vertices. Returns a coloring of doubled(g) with
// palette {RED, BLUE} satisfying verify() and verify_pendant_invariant().
EdgeColoring color_subcubic_independent(const Multigraph& g, const search_budget& budget = {});

}  // namespace lir
