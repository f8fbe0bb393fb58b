// Split graphs: recognition with a maximum clique side, the decision table
// for the locally irregular index of the simple graph, and the 2-coloring of
// the double (direct doubling when the simple index is <= 2, special pendant
// rules for the two index-3 shapes).
#pragma once

#include <optional>
#include <vector>

#include "lir/common.hpp"
#include "lir/multigraph.hpp"

namespace lir {

struct SplitPartition {
    std::vector<int> X;  // clique, maximum possible, sorted by descending d
    std::vector<int> Y;  // independent set
    std::vector<int> d;  // d[i] = neighbors of X[i] inside Y, nonincreasing
};

std::optional<SplitPartition> split_recognize(const Multigraph& g);

enum class SplitLir { One = 1, Two = 2, Three = 3, Undecomposable = 0 };

// Predicted locally irregular index of the simple split graph. n >= 10 uses
// the threshold rule on (d1, d2); n <= 9 uses the full case list.
SplitLir split_lir_table(const Multigraph& g, const SplitPartition& p);

// 2-coloring of doubled(g); g split, g != K2.
EdgeColoring color_split_double(const Multigraph& g, const SplitPartition& p,
                                const search_budget& budget = {});

// Locally irregular 2-colorings of ^2K_n are pulled from the oracle and
// cached; n > 10 is outside desk scope and throws.
const EdgeColoring& clique_double_coloring(int n, const search_budget& budget = {});

}  // namespace lir
