#include "lir/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "lir/verifier.hpp"

namespace lir {

namespace {
thread_local long long g_nodes_total = 0;
}  // namespace

long long search_nodes_total() { return g_nodes_total; }

namespace {

// Backtracking over multiedges in a vertex-major order, so vertices finish
// early and adjacent-degree ties are caught close to the root. Palette
// symmetry is broken by canonical first use (a copy may open color c only if
// every color below c is already in use); the two copies of a multiedge are
// interchangeable, so their colors are kept nondecreasing.
struct LirSolver {
    const Multigraph& g;
    int k;
    long long max_nodes;
    search_stats* stats;

    std::vector<int> order;                 // pair indices, assignment order
    std::vector<std::vector<int>> cd;       // cd[v][c], 1-based colors
    std::vector<int> rem;                   // uncolored copies at v
    std::vector<std::array<int, 2>> asgn;   // per pair
    long long nodes = 0;
    bool exhausted = true;

    LirSolver(const Multigraph& g_, int k_, long long max_nodes_, search_stats* st)
        : g(g_), k(k_), max_nodes(max_nodes_), stats(st) {
        // BFS vertex order from a max-degree vertex, then edges sorted by the
        // later endpoint so each vertex's star is assigned contiguously.
        std::vector<int> pos(g.n, -1);
        int start = 0;
        for (int v = 1; v < g.n; ++v)
            if (g.degree(v) > g.degree(start)) start = v;
        std::vector<int> queue;
        int next = 0;
        for (int s = start, round = 0; round < g.n + 1; ++round) {
            if (round > 0) {
                s = -1;
                for (int v = 0; v < g.n; ++v)
                    if (pos[v] < 0) { s = v; break; }
                if (s < 0) break;
            }
            pos[s] = next++;
            queue.push_back(s);
            for (size_t h = queue.size() - 1; h < queue.size(); ++h) {
                int v = queue[h];
                auto nb = g.neighbors(v);
                std::sort(nb.begin(), nb.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
                for (int w : nb)
                    if (pos[w] < 0) {
                        pos[w] = next++;
                        queue.push_back(w);
                    }
            }
        }
        order.resize(g.pairs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int ma = std::max(pos[g.pairs[a].u], pos[g.pairs[a].v]);
            int mb = std::max(pos[g.pairs[b].u], pos[g.pairs[b].v]);
            if (ma != mb) return ma < mb;
            int na = std::min(pos[g.pairs[a].u], pos[g.pairs[a].v]);
            int nb2 = std::min(pos[g.pairs[b].u], pos[g.pairs[b].v]);
            return na < nb2;
        });
        cd.assign(g.n, std::vector<int>(k + 1, 0));
        rem.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) rem[v] = g.degree(v);
        asgn.assign(g.pairs.size(), {0, 0});
    }

    // Conflict scan once a vertex has no uncolored copies left: compare it
    // against every finished neighbor over the colors on their shared pair.
    bool closed_ok(int v) {
        for (int i : g.inc[v]) {
            const auto& p = g.pairs[i];
            int w = p.u == v ? p.v : p.u;
            if (rem[w] > 0) continue;
            int cols[2] = {asgn[i][0], p.mult == 2 ? asgn[i][1] : 0};
            if (cols[1] == cols[0]) cols[1] = 0;
            for (int col : cols)
                if (col > 0 && cd[v][col] == cd[w][col]) return false;
        }
        return true;
    }

    bool place(int idx, int max_used, EdgeColoring& out) {
        if (++nodes > max_nodes) {
            exhausted = false;
            throw budget_error("locally irregular search: node budget exceeded");
        }
        if (idx == (int)order.size()) {
            out.colors = asgn;
            return true;
        }
        int pi = order[idx];
        const auto& p = g.pairs[pi];
        int lim0 = std::min(k, max_used + 1);
        for (int c0 = 1; c0 <= lim0; ++c0) {
            int used0 = std::max(max_used, c0);
            if (p.mult == 1) {
                asgn[pi] = {c0, 0};
                cd[p.u][c0]++, cd[p.v][c0]++;
                rem[p.u]--, rem[p.v]--;
                bool ok = (rem[p.u] > 0 || closed_ok(p.u)) && (rem[p.v] > 0 || closed_ok(p.v));
                if (ok && place(idx + 1, used0, out)) return true;
                rem[p.u]++, rem[p.v]++;
                cd[p.u][c0]--, cd[p.v][c0]--;
            } else {
                int lim1 = std::min(k, used0 + 1);
                for (int c1 = c0; c1 <= lim1; ++c1) {
                    asgn[pi] = {c0, c1};
                    cd[p.u][c0]++, cd[p.v][c0]++;
                    cd[p.u][c1]++, cd[p.v][c1]++;
                    rem[p.u] -= 2, rem[p.v] -= 2;
                    bool ok = (rem[p.u] > 0 || closed_ok(p.u)) && (rem[p.v] > 0 || closed_ok(p.v));
                    if (ok && place(idx + 1, std::max(used0, c1), out)) return true;
                    rem[p.u] += 2, rem[p.v] += 2;
                    cd[p.u][c0]--, cd[p.v][c0]--;
                    cd[p.u][c1]--, cd[p.v][c1]--;
                }
            }
        }
        asgn[pi] = {0, 0};
        return false;
    }
};

std::optional<EdgeColoring> solve_component(const Multigraph& g, int k,
                                            const std::function<bool(const EdgeColoring&)>* accept,
                                            long long max_nodes, search_stats* stats) {
    LirSolver solver(g, k, max_nodes, stats);
    EdgeColoring out = EdgeColoring::blank(g);
    bool found = false;
    struct NodeGuard {
        LirSolver& s;
        ~NodeGuard() { g_nodes_total += s.nodes; }
    } guard{solver};
    if (!accept) {
        found = solver.place(0, 0, out);
    } else {
        // enumerate witnesses until the predicate accepts one
        struct Enumerator {
            LirSolver& s;
            const std::function<bool(const EdgeColoring&)>& pred;
            EdgeColoring* out;
            bool run(int idx, int max_used) {
                if (++s.nodes > s.max_nodes) {
                    s.exhausted = false;
                    throw budget_error("locally irregular search: node budget exceeded");
                }
                if (idx == (int)s.order.size()) {
                    EdgeColoring cand;
                    cand.colors = s.asgn;
                    if (pred(cand)) {
                        *out = cand;
                        return true;
                    }
                    return false;
                }
                int pi = s.order[idx];
                const auto& p = s.g.pairs[pi];
                int lim0 = std::min(s.k, max_used + 1);
                for (int c0 = 1; c0 <= lim0; ++c0) {
                    int used0 = std::max(max_used, c0);
                    int c1lo = p.mult == 2 ? c0 : 0;
                    int c1hi = p.mult == 2 ? std::min(s.k, used0 + 1) : 0;
                    for (int c1 = c1lo; c1 <= c1hi; ++c1) {
                        s.asgn[pi] = {c0, c1};
                        for (int col : {c0, c1})
                            if (col) {
                                s.cd[p.u][col]++, s.cd[p.v][col]++;
                                s.rem[p.u]--, s.rem[p.v]--;
                            }
                        bool ok = (s.rem[p.u] > 0 || s.closed_ok(p.u)) &&
                                  (s.rem[p.v] > 0 || s.closed_ok(p.v));
                        if (ok && run(idx + 1, std::max(used0, c1))) return true;
                        for (int col : {c0, c1})
                            if (col) {
                                s.cd[p.u][col]--, s.cd[p.v][col]--;
                                s.rem[p.u]++, s.rem[p.v]++;
                            }
                    }
                }
                s.asgn[pi] = {0, 0};
                return false;
            }
        } enumerator{solver, *accept, &out};
        found = enumerator.run(0, 0);
    }
    if (stats) {
        stats->nodes += solver.nodes;
        stats->exhausted = solver.exhausted && !found;
    }
    if (!found) return std::nullopt;
    return out;
}

}  // namespace

std::optional<EdgeColoring> find_lir_coloring(const Multigraph& g, int k,
                                              const search_budget& budget, search_stats* stats) {
    return find_lir_coloring_where(g, k, nullptr, budget, stats);
}

std::optional<EdgeColoring> find_lir_coloring_where(
    const Multigraph& g, int k, const std::function<bool(const EdgeColoring&)>& accept,
    const search_budget& budget, search_stats* stats) {
    if (k < 1) throw error("palette size must be at least 1");
    if (g.pairs.empty()) return EdgeColoring::blank(g);

    auto comps = g.components();
    if (comps.size() == 1) {
        std::function<bool(const EdgeColoring&)> pred = accept;
        return solve_component(g, k, accept ? &pred : nullptr, budget.max_nodes, stats);
    }
    // Color components independently and stitch the results back together.
    EdgeColoring whole = EdgeColoring::blank(g);
    for (const auto& comp : comps) {
        Multigraph sub = g.induced(comp);
        if (sub.pairs.empty()) continue;
        std::function<bool(const EdgeColoring&)> pred;
        if (accept) {
            // Predicate sees the component coloring; global predicates are
            // only used on connected inputs, so this stays componentwise.
            pred = accept;
        }
        auto sol = solve_component(sub, k, accept ? &pred : nullptr, budget.max_nodes, stats);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < sub.pairs.size(); ++i) {
            int u = comp[sub.pairs[i].u], v = comp[sub.pairs[i].v];
            whole.colors[g.pair_index(u, v)] = sol->colors[i];
        }
    }
    return whole;
}

LirResult exact_lir(const Multigraph& g, int k_max, const search_budget& budget,
                    search_stats* stats) {
    if (k_max < 1) throw error("k_max must be at least 1");
    LirResult res;
    if (g.pairs.empty()) {
        res.colorable = true;
        res.value = 0;
        res.witness = EdgeColoring::blank(g);
        return res;
    }
    for (int k = 1; k <= k_max; ++k) {
        search_stats local;
        auto sol = find_lir_coloring(g, k, budget, &local);
        if (stats) stats->nodes += local.nodes;
        if (sol) {
            res.colorable = true;
            res.value = k;
            res.witness = std::move(sol);
            if (stats) stats->exhausted = true;
            return res;
        }
    }
    if (k_max >= g.copy_count()) {
        // More colors than copies can never help, so the search was complete.
        res.colorable = false;
        if (stats) stats->exhausted = true;
        return res;
    }
    throw budget_error("exact_lir: no coloring with k <= " + std::to_string(k_max) +
                       " and palette bound below copy count; result unknown");
}

namespace {

struct NsdSolver {
    const Multigraph& g;
    long long max_nodes;
    std::vector<int> order;
    std::vector<int> sum;
    std::vector<int> rem;
    std::vector<int> weight;
    long long nodes = 0;

    explicit NsdSolver(const Multigraph& g_, long long max_nodes_) : g(g_), max_nodes(max_nodes_) {
        std::vector<int> pos(g.n, -1);
        int next = 0;
        for (int s = 0; s < g.n; ++s) {
            if (pos[s] >= 0) continue;
            std::vector<int> queue{s};
            pos[s] = next++;
            for (size_t h = 0; h < queue.size(); ++h)
                for (int w : g.neighbors(queue[h]))
                    if (pos[w] < 0) {
                        pos[w] = next++;
                        queue.push_back(w);
                    }
        }
        order.resize(g.pairs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int ma = std::max(pos[g.pairs[a].u], pos[g.pairs[a].v]);
            int mb = std::max(pos[g.pairs[b].u], pos[g.pairs[b].v]);
            return ma != mb ? ma < mb : a < b;
        });
        sum.assign(g.n, 0);
        rem.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) rem[v] = g.simple_degree(v);
        weight.assign(g.pairs.size(), 0);
    }

    bool closed_ok(int v) const {
        for (int i : g.inc[v]) {
            int w = g.pairs[i].u == v ? g.pairs[i].v : g.pairs[i].u;
            if (rem[w] == 0 && sum[w] == sum[v]) return false;
        }
        return true;
    }

    bool place(int idx) {
        if (++nodes > max_nodes) throw budget_error("nsd search: node budget exceeded");
        if (idx == (int)order.size()) return true;
        int pi = order[idx];
        const auto& p = g.pairs[pi];
        for (int w = 1; w <= 3; ++w) {
            weight[pi] = w;
            sum[p.u] += w, sum[p.v] += w;
            rem[p.u]--, rem[p.v]--;
            bool ok = (rem[p.u] > 0 || closed_ok(p.u)) && (rem[p.v] > 0 || closed_ok(p.v));
            if (ok && place(idx + 1)) return true;
            sum[p.u] -= w, sum[p.v] -= w;
            rem[p.u]++, rem[p.v]++;
        }
        weight[pi] = 0;
        return false;
    }
};

}  // namespace

NsdColoring find_nsd_123(const Multigraph& g, bool shift, const search_budget& budget,
                         search_stats* stats) {
    if (!g.is_simple()) throw error("nsd weighting requires a simple graph");
    for (const auto& comp : g.components())
        if (comp.size() == 2 && g.induced(comp).pairs.size() == 1)
            throw error("nsd weighting: isolated edge component");
    NsdSolver solver(g, budget.max_nodes);
    bool found = false;
    try {
        found = solver.place(0);
    } catch (...) {
        g_nodes_total += solver.nodes;
        throw;
    }
    g_nodes_total += solver.nodes;
    if (stats) stats->nodes += solver.nodes;
    if (!found) throw error("nsd weighting: search exhausted (unexpected for valid input)");
    NsdColoring out;
    out.weight = solver.weight;
    if (shift)
        for (int& w : out.weight) --w;
    out.vertex_sum.assign(g.n, 0);
    for (size_t i = 0; i < g.pairs.size(); ++i) {
        out.vertex_sum[g.pairs[i].u] += out.weight[i];
        out.vertex_sum[g.pairs[i].v] += out.weight[i];
    }
    return out;
}

namespace {

struct VcSolver {
    const Multigraph& g;
    int k;
    long long max_nodes;
    std::vector<int> cls;
    long long nodes = 0;

    VcSolver(const Multigraph& g_, int k_, long long max_nodes_)
        : g(g_), k(k_), max_nodes(max_nodes_), cls(g_.n, 0) {}

    bool place(int v, int max_used) {
        if (++nodes > max_nodes) throw budget_error("vertex coloring: node budget exceeded");
        if (v == g.n) return true;
        int lim = std::min(k, max_used + 1);
        for (int c = 1; c <= lim; ++c) {
            bool ok = true;
            for (int i : g.inc[v]) {
                int w = g.pairs[i].u == v ? g.pairs[i].v : g.pairs[i].u;
                if (w < v && cls[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cls[v] = c;
            if (place(v + 1, std::max(max_used, c))) return true;
        }
        cls[v] = 0;
        return false;
    }
};

}  // namespace

std::optional<VertexColoring> proper_vertex_coloring(const Multigraph& g, int k_max,
                                                     const search_budget& budget,
                                                     search_stats* stats) {
    if (k_max < 1) throw error("k_max must be at least 1");
    if (g.n == 0) return VertexColoring{{}, 0};
    for (int k = 1; k <= k_max; ++k) {
        VcSolver solver(g, k, budget.max_nodes);
        bool found = false;
        try {
            found = solver.place(0, 0);
        } catch (...) {
            g_nodes_total += solver.nodes;
            throw;
        }
        g_nodes_total += solver.nodes;
        if (stats) stats->nodes += solver.nodes;
        if (found) return VertexColoring{solver.cls, k};
    }
    return std::nullopt;
}

int chromatic_number(const Multigraph& g, int k_max, const search_budget& budget) {
    auto vc = proper_vertex_coloring(g, k_max, budget);
    if (!vc) throw error("chromatic number exceeds " + std::to_string(k_max));
    return vc->classes;
}

}  // namespace lir
