#include "lir/strategy.hpp"

#include <chrono>
#include <set>
#include <tuple>

#include "lir/decomposition.hpp"
#include "lir/independent.hpp"
#include "lir/lift.hpp"
#include "lir/oracle.hpp"
#include "lir/path_expand.hpp"
#include "lir/phi.hpp"
#include "lir/planar.hpp"
#include "lir/regular.hpp"
#include "lir/split.hpp"
#include "lir/verifier.hpp"

namespace lir {

namespace {

bool degree3_independent(const Multigraph& g) {
    for (const auto& p : g.pairs)
        if (g.degree(p.u) == 3 && g.degree(p.v) == 3) return false;
    return true;
}

// Contract chains of degree-2 vertices between degree-3 vertices; when the
// result is cubic and every contracted chain is a single edge or length >= 5,
// the long-paths pipeline applies.
struct LongPathsPlan {
    Multigraph base;                                   // the cubic graph
    std::vector<int> base_vertex;                      // base id -> g id
    std::vector<std::tuple<int, int, std::vector<int>>> chains;  // base u, v, interior (g ids)
};

std::optional<LongPathsPlan> long_paths_plan(const Multigraph& g) {
    if (g.max_degree() > 3 || !g.is_connected()) return std::nullopt;
    std::vector<int> branch;  // degree-3 vertices
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 3) branch.push_back(v);
        else if (g.degree(v) != 2) return std::nullopt;
    }
    if (branch.size() < 4) return std::nullopt;
    std::vector<int> base_id(g.n, -1);
    for (size_t i = 0; i < branch.size(); ++i) base_id[branch[i]] = (int)i;

    LongPathsPlan plan;
    plan.base_vertex = branch;
    std::vector<EdgeInput> base_edges;
    std::set<std::pair<int, int>> seen_chain_start;
    for (int s : branch)
        for (int t : g.neighbors(s)) {
            if (seen_chain_start.count({s, t})) continue;
            // walk the chain from s through t
            std::vector<int> interior;
            int prev = s, cur = t;
            while (g.degree(cur) == 2) {
                interior.push_back(cur);
                auto nb = g.neighbors(cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) != 3) return std::nullopt;
            seen_chain_start.insert({s, t});
            seen_chain_start.insert({cur, prev});
            int length = (int)interior.size() + 1;
            if (length != 1 && length < 5) return std::nullopt;
            if (base_id[s] == base_id[cur]) return std::nullopt;  // chain loops back
            base_edges.push_back({base_id[s], base_id[cur], 1});
            plan.chains.push_back({base_id[s], base_id[cur], interior});
        }
    // duplicate base edges would make the contraction a multigraph
    std::set<std::pair<int, int>> uniq;
    for (auto& e : base_edges) {
        if (!uniq.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return std::nullopt;
    }
    plan.base = Multigraph::from_edges((int)branch.size(), base_edges);
    for (int v = 0; v < plan.base.n; ++v)
        if (plan.base.degree(v) != 3) return std::nullopt;
    return plan;
}

EdgeColoring color_long_paths(const Multigraph& g, const LongPathsPlan& plan,
                              const search_budget& budget) {
    // 2-color the cubic base's double, then expand each long chain in turn.
    Multigraph cur = plan.base;
    EdgeColoring col = color_regular_double(cur, budget);
    // map from current graph's vertices to g's vertices
    std::vector<int> to_g = plan.base_vertex;
    for (const auto& [bu, bv, interior] : plan.chains) {
        if (interior.empty()) continue;
        int length = (int)interior.size() + 1;
        ExpansionResult res = expand_edge_to_path(cur, col, bu, bv, length);
        for (int gi : interior) to_g.push_back(gi);
        cur = std::move(res.g);
        col = std::move(res.c);
    }
    // translate onto g's numbering
    Multigraph g2 = doubled(g);
    EdgeColoring out = EdgeColoring::blank(g2);
    for (size_t i = 0; i < cur.pairs.size(); ++i) {
        int u = to_g[cur.pairs[i].u], v = to_g[cur.pairs[i].v];
        int pi = g2.pair_index(u, v);
        if (pi < 0) throw error("long-paths expansion produced a stray edge");
        out.colors[pi] = col.colors[i];
    }
    return out;
}

}  // namespace

StrategyOutcome color_double_auto(const Multigraph& g, const StrategyOptions& opts) {
    StrategyOutcome out;
    out.report.strategy = opts.strategy;
    auto t0 = std::chrono::steady_clock::now();
    long long nodes0 = search_nodes_total();
    search_stats stats;
    Multigraph g2 = doubled(g);

    auto finish = [&](const char* name, EdgeColoring c) {
        out.report.strategy = name;
        out.report.palette = (int)c.colors_used().size();
        out.report.verified = verify(g2, c).ok;
        if (!out.report.verified) throw error("constructor output failed verification");
        out.coloring = std::move(c);
    };

    try {
        if (g.n == 2 && g.pairs.size() == 1) throw error("K2 is excluded throughout");
        const std::string& s = opts.strategy;
        if (s == "regular") {
            finish("regular", color_regular_double(g, opts.budget));
        } else if (s == "split") {
            auto p = split_recognize(g);
            if (!p) throw error("graph is not split");
            finish("split", color_split_double(g, *p, opts.budget));
        } else if (s == "bipartite") {
            if (!g.bipartition()) throw error("graph is not bipartite");
            auto c = find_lir_coloring(g2, 2, opts.budget, &stats);
            if (!c) throw error("no 2-coloring found for a bipartite double");
            finish("bipartite", std::move(*c));
        } else if (s == "subcubic-independent") {
            finish("subcubic-independent", color_subcubic_independent(g, opts.budget));
        } else if (s == "subcubic3") {
            auto [d, phi] = decompose_and_color(g);
            finish("subcubic3", lift_double_3(g, d, phi));
        } else if (s == "planar4") {
            finish("planar4", color_planar_double(g, opts.budget));
        } else if (s == "long-paths") {
            auto plan = long_paths_plan(g);
            if (!plan) throw error("graph is not a cubic graph with long replaced edges");
            finish("long-paths", color_long_paths(g, *plan, opts.budget));
        } else if (s == "oracle") {
            auto r = exact_lir(g2, opts.k_max, opts.budget, &stats);
            if (!r.colorable) throw error("double reported uncolorable");
            finish("oracle", std::move(*r.witness));
        } else if (s == "auto") {
            // strongest applicable theorem first; a stage that declines its
            // input falls through to the next
            bool done = false;
            auto attempt = [&](bool applicable, const char* name,
                               const std::function<EdgeColoring()>& make) {
                if (done || !applicable) return;
                try {
                    finish(name, make());
                    done = true;
                } catch (const error&) {
                }
            };
            attempt(g.is_connected() && g.is_regular() && g.n > 0 && g.degree(0) >= 2, "regular",
                    [&] { return color_regular_double(g, opts.budget); });
            attempt(g.n <= 20 && split_recognize(g).has_value(), "split", [&] {
                return color_split_double(g, *split_recognize(g), opts.budget);
            });
            attempt(g.is_connected() && g.max_degree() <= 3 && degree3_independent(g),
                    "subcubic-independent", [&] { return color_subcubic_independent(g, opts.budget); });
            attempt(g.is_connected() && g.max_degree() <= 3, "subcubic3", [&] {
                auto [d, phi] = decompose_and_color(g);
                return lift_double_3(g, d, phi);
            });
            attempt(g.is_connected(), "planar4", [&] { return color_planar_double(g, opts.budget); });
            if (!done) {
                auto r = exact_lir(g2, opts.k_max, opts.budget, &stats);
                if (!r.colorable) throw error("double reported uncolorable");
                finish("oracle", std::move(*r.witness));
            }
            // desk-scale refinement: try to get down to two colors
            if (out.report.palette > 2 && g.n <= 10) {
                try {
                    auto c2 = find_lir_coloring(g2, 2, opts.budget, &stats);
                    if (c2) finish("oracle", std::move(*c2));
                } catch (const budget_error&) {
                }
            }
        } else {
            throw error("unknown strategy: " + s);
        }
    } catch (const std::exception& e) {
        out.report.error = e.what();
        out.coloring.reset();
    }

    out.report.nodes = search_nodes_total() - nodes0;
    auto t1 = std::chrono::steady_clock::now();
    out.report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

}  // namespace lir
