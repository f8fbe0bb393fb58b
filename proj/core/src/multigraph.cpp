#include "lir/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lir {

Multigraph Multigraph::from_edges(int n, const std::vector<EdgeInput>& edges) {
    if (n < 0) throw error("vertex count must be nonnegative");
    Multigraph g;
    g.n = n;
    g.pairs.reserve(edges.size());
    for (const auto& e : edges) {
        int u = e.u, v = e.v;
        if (u == v) throw error("loops are not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n) throw error("vertex index out of range");
        if (e.mult < 1 || e.mult > 2) throw error("multiplicity must be 1 or 2");
        if (u > v) std::swap(u, v);
        g.pairs.push_back({u, v, e.mult});
    }
    std::sort(g.pairs.begin(), g.pairs.end(), [](const Pair& a, const Pair& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (size_t i = 1; i < g.pairs.size(); ++i)
        if (g.pairs[i].u == g.pairs[i - 1].u && g.pairs[i].v == g.pairs[i - 1].v)
            throw error("duplicate pair entry; use multiplicity instead");
    g.inc.assign(n, {});
    for (int i = 0; i < (int)g.pairs.size(); ++i) {
        g.inc[g.pairs[i].u].push_back(i);
        g.inc[g.pairs[i].v].push_back(i);
    }
    return g;
}

int Multigraph::pair_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    int lo = 0, hi = (int)pairs.size() - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        const Pair& p = pairs[mid];
        if (p.u == u && p.v == v) return mid;
        if (p.u < u || (p.u == u && p.v < v)) lo = mid + 1;
        else hi = mid - 1;
    }
    return -1;
}

int Multigraph::multiplicity(int u, int v) const {
    int i = pair_index(u, v);
    return i < 0 ? 0 : pairs[i].mult;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (int i : inc[v]) d += pairs[i].mult;
    return d;
}

int Multigraph::simple_degree(int v) const { return (int)inc[v].size(); }

int Multigraph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m = std::max(m, degree(v));
    return m;
}

long long Multigraph::copy_count() const {
    long long c = 0;
    for (const Pair& p : pairs) c += p.mult;
    return c;
}

bool Multigraph::is_simple() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const Pair& p) { return p.mult == 1; });
}

bool Multigraph::is_two_multigraph() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const Pair& p) { return p.mult == 2; });
}

bool Multigraph::is_connected() const {
    if (n <= 1) return true;
    return (int)component_of(0).size() == n;
}

bool Multigraph::is_regular() const {
    if (n == 0) return true;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return false;
    return true;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(inc[v].size());
    for (int i : inc[v]) out.push_back(pairs[i].u == v ? pairs[i].v : pairs[i].u);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Multigraph::component_of(int start) const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start}, out;
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int i : inc[v]) {
            int w = pairs[i].u == v ? pairs[i].v : pairs[i].u;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Multigraph::components() const {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        auto comp = component_of(v);
        for (int w : comp) seen[w] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

Multigraph Multigraph::induced(const std::vector<int>& verts) const {
    std::vector<int> remap(n, -1);
    for (int i = 0; i < (int)verts.size(); ++i) remap[verts[i]] = i;
    std::vector<EdgeInput> edges;
    for (const Pair& p : pairs)
        if (remap[p.u] >= 0 && remap[p.v] >= 0)
            edges.push_back({remap[p.u], remap[p.v], p.mult});
    return from_edges((int)verts.size(), edges);
}

std::optional<std::vector<int>> Multigraph::bipartition() const {
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i : inc[v]) {
                int w = pairs[i].u == v ? pairs[i].v : pairs[i].u;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

EdgeColoring EdgeColoring::blank(const Multigraph& g) {
    EdgeColoring c;
    c.colors.assign(g.pairs.size(), {0, 0});
    return c;
}

int EdgeColoring::get(const Multigraph& g, int u, int v, int copy) const {
    int i = g.pair_index(u, v);
    if (i < 0) throw error("no such pair");
    if (copy < 0 || copy >= g.pairs[i].mult) throw error("copy index out of range");
    return colors[i][copy];
}

void EdgeColoring::set(const Multigraph& g, int u, int v, int copy, int color) {
    int i = g.pair_index(u, v);
    if (i < 0) throw error("no such pair");
    if (copy < 0 || copy >= g.pairs[i].mult) throw error("copy index out of range");
    if (color < 0) throw error("colors must be positive");
    colors[i][copy] = color;
}

void EdgeColoring::set_multiedge(const Multigraph& g, int u, int v, int c0, int c1) {
    int i = g.pair_index(u, v);
    if (i < 0) throw error("no such pair");
    if (g.pairs[i].mult != 2) throw error("pair is not a multiedge");
    colors[i][0] = c0;
    colors[i][1] = c1;
}

bool EdgeColoring::is_total(const Multigraph& g) const {
    if (colors.size() != g.pairs.size()) return false;
    for (size_t i = 0; i < colors.size(); ++i)
        for (int k = 0; k < g.pairs[i].mult; ++k)
            if (colors[i][k] == 0) return false;
    return true;
}

int EdgeColoring::palette_size() const {
    int m = 0;
    for (const auto& a : colors) m = std::max({m, a[0], a[1]});
    return m;
}

std::vector<int> EdgeColoring::colors_used() const {
    std::vector<int> out;
    for (const auto& a : colors)
        for (int k : {a[0], a[1]})
            if (k > 0) out.push_back(k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Multigraph doubled(const Multigraph& g) {
    if (!g.is_simple()) throw error("doubling requires a simple graph");
    Multigraph h = g;
    for (auto& p : h.pairs) p.mult = 2;
    return h;
}

Multigraph underlying_simple(const Multigraph& g) {
    Multigraph h = g;
    for (auto& p : h.pairs) p.mult = 1;
    return h;
}

EdgeColoring doubled_coloring(const Multigraph& g, const EdgeColoring& c) {
    if (!g.is_simple()) throw error("doubling requires a simple graph");
    EdgeColoring out;
    out.colors.resize(g.pairs.size());
    for (size_t i = 0; i < g.pairs.size(); ++i) out.colors[i] = {c.colors[i][0], c.colors[i][0]};
    return out;
}

int color_degree(const Multigraph& g, const EdgeColoring& c, int v, int color) {
    int d = 0;
    for (int i : g.inc[v])
        for (int k = 0; k < g.pairs[i].mult; ++k) {
            if (c.colors[i][k] == 0) throw error("partial coloring: uncolored copy at vertex");
            if (c.colors[i][k] == color) ++d;
        }
    return d;
}

int color_degree_partial(const Multigraph& g, const EdgeColoring& c, int v, int color) {
    int d = 0;
    for (int i : g.inc[v])
        for (int k = 0; k < g.pairs[i].mult; ++k)
            if (c.colors[i][k] == color) ++d;
    return d;
}

ColorDegreeProfile color_degree_profile(const Multigraph& g, const EdgeColoring& c) {
    ColorDegreeProfile p;
    p.palette = c.palette_size();
    p.degree.assign(g.n, std::vector<int>(p.palette + 1, 0));
    for (size_t i = 0; i < g.pairs.size(); ++i)
        for (int k = 0; k < g.pairs[i].mult; ++k) {
            int col = c.colors[i][k];
            if (col == 0) throw error("partial coloring: profile needs a total coloring");
            p.degree[g.pairs[i].u][col]++;
            p.degree[g.pairs[i].v][col]++;
        }
    return p;
}

MonochromaticSubgraph monochromatic_subgraph(const Multigraph& g, const EdgeColoring& c, int color) {
    std::vector<int> count(g.pairs.size(), 0);
    for (size_t i = 0; i < g.pairs.size(); ++i)
        for (int k = 0; k < g.pairs[i].mult; ++k)
            if (c.colors[i][k] == color) count[i]++;
    std::vector<char> keep(g.n, 0);
    for (size_t i = 0; i < g.pairs.size(); ++i)
        if (count[i] > 0) keep[g.pairs[i].u] = keep[g.pairs[i].v] = 1;
    MonochromaticSubgraph out;
    std::vector<int> remap(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (keep[v]) {
            remap[v] = (int)out.vertex_ids.size();
            out.vertex_ids.push_back(v);
        }
    std::vector<EdgeInput> edges;
    for (size_t i = 0; i < g.pairs.size(); ++i)
        if (count[i] > 0)
            edges.push_back({remap[g.pairs[i].u], remap[g.pairs[i].v], count[i]});
    out.g = Multigraph::from_edges((int)out.vertex_ids.size(), edges);
    return out;
}

}  // namespace lir
