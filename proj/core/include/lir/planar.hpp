// The <=4-coloring of ^2G through a proper vertex coloring: split E(G) into
// two bipartite spanning subgraphs (one rule for chi = 3, another for
// chi = 4), repair isolated edges, and 2-color each double independently
// with disjoint palettes {red, blue} and {green, yellow}.
#pragma once

#include <string>

#include "lir/common.hpp"
#include "lir/multigraph.hpp"
#include "lir/oracle.hpp"

namespace lir {

struct BipartiteSplit {
    std::vector<char> in_g1;  // per pair index of g
    std::string rule;         // "chi3" or "chi4"
};

// Requires: vc proper with 3 or 4 classes, g connected, not bipartite,
// not K2, no isolated edges. Both parts end up bipartite, nonempty and free
// of isolated edges; throws a budget error when the repair search exhausts.
BipartiteSplit bipartite_split(const Multigraph& g, const VertexColoring& vc,
                               const search_budget& budget = {});

// <= 2 colors when g is bipartite, <= 4 otherwise; error when chi(g) > 4.
EdgeColoring color_planar_double(const Multigraph& g, const search_budget& budget = {});

}  // namespace lir
