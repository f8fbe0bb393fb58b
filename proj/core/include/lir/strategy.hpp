// Strategy dispatch for the batch front-end: pick the strongest applicable
// construction for ^2G, re-verify its output, and report what happened.
#pragma once

#include <optional>
#include <string>

#include "lir/common.hpp"
#include "lir/multigraph.hpp"

namespace lir {

struct StrategyOptions {
    std::string strategy = "auto";  // auto | regular | split | bipartite |
                                    // subcubic-independent | subcubic3 |
                                    // planar4 | long-paths | oracle
    int k_max = 8;                  // oracle palette cap
    search_budget budget;
    bool deterministic = false;
};

struct StrategyReport {
    std::string graph_id;
    std::string strategy;  // what actually ran
    int palette = 0;
    bool verified = false;  // recomputed by the verifier, never trusted
    double wall_ms = 0.0;
    long long nodes = 0;  // search nodes spent
    std::string error;    // nonempty on failure
};

struct StrategyOutcome {
    std::optional<EdgeColoring> coloring;  // of doubled(g)
    StrategyReport report;
};

// Colors doubled(g). "auto" tries regular, split, subcubic-independent,
// subcubic3, planar4, then the oracle; results needing more than two colors
// are refined by a desk-scale oracle attempt at two.
StrategyOutcome color_double_auto(const Multigraph& g, const StrategyOptions& opts);

}  // namespace lir
