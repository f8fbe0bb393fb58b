#include "lir/planar.hpp"

#include <algorithm>

#include "lir/families.hpp"
#include "lir/verifier.hpp"

namespace lir {

namespace {

// Component/bipartite bookkeeping for one side of a split. Sides are tiny,
// so everything is recomputed by BFS per query.
struct Side {
    const Multigraph& g;
    std::vector<char> has;  // per pair index

    int degree(int v) const {
        int d = 0;
        for (int i : g.inc[v])
            if (has[i]) ++d;
        return d;
    }

    bool empty() const { return std::count(has.begin(), has.end(), 1) == 0; }

    bool bipartite() const {
        std::vector<int> side(g.n, -1);
        for (int s = 0; s < g.n; ++s) {
            if (side[s] >= 0 || degree(s) == 0) continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int i : g.inc[v]) {
                    if (!has[i]) continue;
                    int w = g.pairs[i].u == v ? g.pairs[i].v : g.pairs[i].u;
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    } else if (side[w] == side[v]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // Pair indices of single-edge components.
    std::vector<int> isolated_edges() const {
        std::vector<int> out;
        for (size_t i = 0; i < g.pairs.size(); ++i)
            if (has[i] && degree(g.pairs[i].u) == 1 && degree(g.pairs[i].v) == 1)
                out.push_back((int)i);
        return out;
    }
};

}  // namespace

BipartiteSplit bipartite_split(const Multigraph& g, const VertexColoring& vc,
                               const search_budget& budget) {
    if (!g.is_simple() || !g.is_connected()) throw error("bipartite split expects a connected simple graph");
    if (g.n == 2) throw error("K2 is excluded");
    if (vc.classes < 3) throw error("use bipartite pipeline");
    if (vc.classes > 4) throw error("bipartite split expects 3 or 4 classes");

    BipartiteSplit split;
    split.rule = vc.classes == 3 ? "chi3" : "chi4";
    split.in_g1.assign(g.pairs.size(), 0);
    for (size_t i = 0; i < g.pairs.size(); ++i) {
        int cu = vc.cls[g.pairs[i].u], cv = vc.cls[g.pairs[i].v];
        if (vc.classes == 3) {
            split.in_g1[i] = cu == 1 || cv == 1;
        } else {
            auto one_way = [](int a, int b) {
                return ((a == 1 || a == 3) && b == 2) || (a == 3 && b == 4);
            };
            split.in_g1[i] = one_way(cu, cv) || one_way(cv, cu);
        }
    }

    Side g1{g, {}}, g2{g, {}};
    g1.has.assign(g.pairs.size(), 0);
    g2.has.assign(g.pairs.size(), 0);
    for (size_t i = 0; i < g.pairs.size(); ++i) (split.in_g1[i] ? g1 : g2).has[i] = 1;
    if (!g1.bipartite() || !g2.bipartite()) throw error("split rule produced a non-bipartite side");
    if (g1.empty() || g2.empty()) throw error("split rule produced an empty side");

    // Repair: move edges between the sides until neither has a single-edge
    // component, keeping both sides bipartite and nonempty. Local moves
    // first (move the isolated edge over, or pull a neighboring edge in),
    // then a bounded exhaustive pass over the incident edge sets.
    auto isolated_total = [&]() { return g1.isolated_edges().size() + g2.isolated_edges().size(); };
    long long steps = 0;
    while (isolated_total() > 0) {
        if (++steps > 4 * (long long)g.pairs.size() + 64) break;
        Side& from = g1.isolated_edges().empty() ? g2 : g1;
        Side& to = (&from == &g1) ? g2 : g1;
        int e = from.isolated_edges().front();
        const auto& p = g.pairs[e];
        bool moved = false;
        // move e across when it lands on a nonempty spot and keeps `to` bipartite
        if (to.degree(p.u) + to.degree(p.v) > 0) {
            to.has[e] = 1;
            from.has[e] = 0;
            if (to.bipartite() && !from.empty())
                moved = true;
            else {
                to.has[e] = 0;
                from.has[e] = 1;
            }
        }
        if (!moved) {
            // pull an edge incident to e's endpoints from the other side
            for (int v : {p.u, p.v}) {
                for (int i : g.inc[v]) {
                    if (!to.has[i]) continue;
                    to.has[i] = 0;
                    from.has[i] = 1;
                    if (from.bipartite() && !to.empty() && to.isolated_edges().size() <= 1 &&
                        from.isolated_edges().size() < 2) {
                        moved = true;
                        break;
                    }
                    to.has[i] = 1;
                    from.has[i] = 0;
                }
                if (moved) break;
            }
        }
        if (!moved) break;
    }

    if (isolated_total() > 0) {
        // Bounded exhaustive fallback: re-split from scratch over all
        // assignments for small graphs, keeping both sides bipartite.
        if (g.pairs.size() <= 22) {
            long long limit = 1LL << g.pairs.size();
            for (long long mask = 1; mask + 1 < limit; ++mask) {
                for (size_t i = 0; i < g.pairs.size(); ++i) {
                    g1.has[i] = (mask >> i) & 1;
                    g2.has[i] = !g1.has[i];
                }
                if (g1.bipartite() && g2.bipartite() && g1.isolated_edges().empty() &&
                    g2.isolated_edges().empty())
                    break;
                if (mask + 2 >= limit)
                    throw budget_error("isolated-edge repair exhausted every split");
            }
        } else {
            throw budget_error("isolated-edge repair did not converge");
        }
    }

    for (size_t i = 0; i < g.pairs.size(); ++i) split.in_g1[i] = g1.has[i];
    return split;
}

EdgeColoring color_planar_double(const Multigraph& g, const search_budget& budget) {
    if (!g.is_simple() || !g.is_connected()) throw error("expects a connected simple graph");
    if (g.n == 2 && g.pairs.size() == 1) throw error("K2 is excluded");

    Multigraph g2 = doubled(g);
    if (g.bipartition()) {
        auto sol = find_lir_coloring(g2, 2, budget);
        if (!sol) throw error("bipartite double refused a 2-coloring (unexpected)");
        return *sol;
    }

    // K3 is the one connected graph whose edge set cannot be split free of
    // isolated edges; it still 2-colors directly as a doubled complete graph.
    if (g.n == 3 && g.pairs.size() == 3) {
        auto sol = find_lir_coloring(g2, 2, budget);
        if (!sol) throw error("doubled triangle refused a 2-coloring (unexpected)");
        return *sol;
    }

    auto vc = proper_vertex_coloring(g, 4, budget);
    if (!vc) throw error("chromatic number exceeds 4; construction does not apply");

    BipartiteSplit split = bipartite_split(g, *vc, budget);

    // Assemble the two halves as separate graphs, 2-color their doubles with
    // disjoint palettes, then merge.
    std::vector<int> idx1, idx2;
    for (size_t i = 0; i < g.pairs.size(); ++i) (split.in_g1[i] ? idx1 : idx2).push_back((int)i);
    EdgeColoring out = EdgeColoring::blank(g2);
    for (int half = 0; half < 2; ++half) {
        const std::vector<int>& idx = half == 0 ? idx1 : idx2;
        std::vector<EdgeInput> edges;
        std::vector<int> verts;
        {
            std::vector<char> used(g.n, 0);
            for (int i : idx) used[g.pairs[i].u] = used[g.pairs[i].v] = 1;
            for (int v = 0; v < g.n; ++v)
                if (used[v]) verts.push_back(v);
        }
        std::vector<int> remap(g.n, -1);
        for (size_t k = 0; k < verts.size(); ++k) remap[verts[k]] = (int)k;
        for (int i : idx) edges.push_back({remap[g.pairs[i].u], remap[g.pairs[i].v], 2});
        Multigraph half_g = Multigraph::from_edges((int)verts.size(), edges);
        auto sol = find_lir_coloring(half_g, 2, budget);
        if (!sol) throw error("bipartite half refused a 2-coloring (unexpected)");
        int base = half == 0 ? 0 : 2;  // {red, blue} vs {green, yellow}
        for (size_t k = 0; k < half_g.pairs.size(); ++k) {
            int u = verts[half_g.pairs[k].u], v = verts[half_g.pairs[k].v];
            out.set_multiedge(g2, u, v, sol->colors[k][0] + base, sol->colors[k][1] + base);
        }
    }
    return out;
}

}  // namespace lir
