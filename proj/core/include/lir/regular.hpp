// 2-coloring of ^2G for connected regular G: shift a {1,2,3} neighbor-sum-
// distinguishing weighting down to {0,1,2} and replace weight 0/1/2 edges by
// blue-blue/red-blue/red-red multiedges. The red degree of every vertex then
// equals its shifted weight sum, so adjacent red degrees differ, and blue
// degrees follow because ^2G is regular.
#pragma once

#include "lir/common.hpp"
#include "lir/multigraph.hpp"

namespace lir {

// g must be connected, d-regular with d >= 2 (in particular not K2).
// Returns a coloring of doubled(g) with palette {RED, BLUE}.
EdgeColoring color_regular_double(const Multigraph& g, const search_budget& budget = {});

}  // namespace lir
