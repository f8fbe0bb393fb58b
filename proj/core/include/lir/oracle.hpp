// Exact search-based ground truth: locally irregular chromatic index by
// backtracking over edge copies, neighbor-sum-distinguishing weightings with
// {1,2,3}, and minimum proper vertex colorings. These substitute, at desk
// scale, for the existence results the constructions import.
#pragma once

#include <functional>
#include <optional>

#include "lir/common.hpp"
#include "lir/multigraph.hpp"

namespace lir {

struct LirResult {
    bool colorable = false;  // false only after exhausting every usable palette
    int value = 0;           // defined when colorable
    std::optional<EdgeColoring> witness;
};

// Smallest k <= k_max admitting a locally irregular k-coloring. Declares
// "uncolorable" only when search is exhausted for every k up to the copy
// count (a palette beyond that can never help); otherwise raises a budget
// error. Disconnected input is handled per component (value = max).
LirResult exact_lir(const Multigraph& g, int k_max, const search_budget& budget = {},
                    search_stats* stats = nullptr);

// Decision variant: a verifying k-coloring, or nullopt when none exists.
std::optional<EdgeColoring> find_lir_coloring(const Multigraph& g, int k,
                                              const search_budget& budget = {},
                                              search_stats* stats = nullptr);

// Same search, but only accepts leaves satisfying an extra predicate.
std::optional<EdgeColoring> find_lir_coloring_where(
    const Multigraph& g, int k, const std::function<bool(const EdgeColoring&)>& accept,
    const search_budget& budget = {}, search_stats* stats = nullptr);

struct NsdColoring {
    std::vector<int> weight;      // per pair index of the simple graph
    std::vector<int> vertex_sum;  // induced sums
};

// Neighbor-sum-distinguishing weighting with {1,2,3} ({0,1,2} when shifted).
// Input must be simple with no isolated-edge component.
NsdColoring find_nsd_123(const Multigraph& g, bool shift = false,
                         const search_budget& budget = {}, search_stats* stats = nullptr);

struct VertexColoring {
    std::vector<int> cls;  // 1-based class per vertex
    int classes = 0;
};

// Proper coloring with the minimum number of classes <= k_max.
std::optional<VertexColoring> proper_vertex_coloring(const Multigraph& g, int k_max,
                                                     const search_budget& budget = {},
                                                     search_stats* stats = nullptr);

int chromatic_number(const Multigraph& g, int k_max, const search_budget& budget = {});

// Total search nodes spent by every kernel on this thread since start;
// callers snapshot before/after to attribute work.
long long search_nodes_total();

}  // namespace lir
