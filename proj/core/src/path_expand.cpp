#include "lir/path_expand.hpp"

#include <algorithm>

#include "lir/families.hpp"
#include "lir/verifier.hpp"

namespace lir {

namespace {

int other(int c) { return c == RED ? BLUE : RED; }

// multiedge color shorthand: {a, a} or {a, b}
struct M {
    int a, b;
};
M mono(int c) { return {c, c}; }
M mixed() { return {RED, BLUE}; }

// The per-length patterns for the red-blue case; index 0 is the multiedge at
// u. "Dotted" marks the pair replaced by a standard segment when l >= 9.
struct Pattern {
    std::vector<M> edges;
    int dotted = -1;        // index of the first of the replaceable pair
    int dotted_color = 0;   // the pair's color
};

Pattern subcase21(int l) {
    switch (l) {
        case 5: return {{mixed(), mono(RED), mono(RED), mono(BLUE), mixed()}, 1, RED};
        case 6: return {{mixed(), mono(RED), mono(RED), mono(BLUE), mono(BLUE), mixed()}, 1, RED};
        case 7:
            return {{mixed(), mono(RED), mono(RED), mixed(), mono(BLUE), mono(BLUE), mixed()}, 1, RED};
        case 8:
            return {{mixed(), mono(RED), mono(RED), mixed(), mixed(), mono(BLUE), mono(BLUE), mixed()},
                    1,
                    RED};
    }
    throw error("pattern length out of range");
}

Pattern subcase22(int l) {
    switch (l) {
        case 5: return {{mixed(), mixed(), mono(BLUE), mono(BLUE), mixed()}, 2, BLUE};
        case 6: return {{mixed(), mixed(), mono(RED), mono(BLUE), mono(BLUE), mixed()}, 3, BLUE};
        case 7:
            return {{mixed(), mixed(), mono(RED), mono(RED), mono(BLUE), mono(BLUE), mixed()}, 4, BLUE};
        case 8:
            return {{mixed(), mixed(), mono(RED), mono(RED), mixed(), mono(BLUE), mono(BLUE), mixed()},
                    5,
                    BLUE};
    }
    throw error("pattern length out of range");
}

Pattern subcase23(int l) {
    switch (l) {
        case 5: return {{mixed(), mono(RED), mono(RED), mixed(), mixed()}, 1, RED};
        case 6: return {{mixed(), mono(RED), mono(RED), mono(BLUE), mixed(), mixed()}, 1, RED};
        case 7:
            return {{mixed(), mono(RED), mono(RED), mono(BLUE), mono(BLUE), mixed(), mixed()}, 1, RED};
        case 8:
            return {{mixed(), mono(RED), mono(RED), mono(BLUE), mono(BLUE), mono(RED), mixed(), mixed()},
                    1,
                    RED};
    }
    throw error("pattern length out of range");
}

// Splice a standard 4k+2 segment in place of the dotted monochromatic pair.
std::vector<M> stretch(const Pattern& base, int l, int base_l) {
    std::vector<M> out;
    int extra = l - base_l;  // multiple of 4
    for (int i = 0; i < (int)base.edges.size(); ++i) {
        if (i == base.dotted) {
            int seg = extra + 2;  // 4k+2 standard segment
            int c = base.dotted_color;
            for (int t = 0; t < seg; ++t) {
                bool first_block = (t / 2) % 2 == 0;
                out.push_back(mono(first_block ? c : other(c)));
            }
            ++i;  // skip the second dotted edge
        } else {
            out.push_back(base.edges[i]);
        }
    }
    return out;
}

}  // namespace

EdgeColoring standard_path_coloring(int length, int start_color) {
    if (length < 2 || length % 4 != 2) throw error("standard coloring needs length 2 mod 4");
    Multigraph path2 = doubled(make_path(length));
    EdgeColoring c = EdgeColoring::blank(path2);
    for (int t = 0; t < length; ++t) {
        bool first_block = (t / 2) % 2 == 0;
        int col = first_block ? start_color : other(start_color);
        c.set_multiedge(path2, t, t + 1, col, col);
    }
    return c;
}

ExpansionResult expand_edge_to_path(const Multigraph& g1, const EdgeColoring& c1, int u, int v,
                                    int length) {
    if (length < 5) throw error("expansion needs length >= 5");
    if (!g1.is_simple()) throw error("expansion expects a simple base graph");
    if (g1.degree(u) != 3 || g1.degree(v) != 3) throw error("expansion endpoints must have degree 3");
    int pi = g1.pair_index(u, v);
    if (pi < 0) throw error("expansion edge not present");
    Multigraph g1d = doubled(g1);
    {
        auto rep = verify(g1d, c1);
        if (!rep.ok) throw error("base coloring is not locally irregular");
    }

    // the new graph: uv removed, interior vertices appended
    std::vector<EdgeInput> edges;
    for (size_t i = 0; i < g1.pairs.size(); ++i)
        if ((int)i != pi) edges.push_back({g1.pairs[i].u, g1.pairs[i].v, 1});
    std::vector<int> inner(length - 1);
    for (int i = 0; i < length - 1; ++i) inner[i] = g1.n + i;
    edges.push_back({u, inner[0], 1});
    for (int i = 0; i + 1 < length - 1; ++i) edges.push_back({inner[i], inner[i + 1], 1});
    edges.push_back({inner[length - 2], v, 1});
    Multigraph g = Multigraph::from_edges(g1.n + length - 1, edges);
    Multigraph g2 = doubled(g);

    EdgeColoring c = EdgeColoring::blank(g2);
    for (size_t i = 0; i < g1.pairs.size(); ++i) {
        if ((int)i == pi) continue;
        c.colors[g.pair_index(g1.pairs[i].u, g1.pairs[i].v)] = c1.colors[i];
    }

    int uv0 = c1.colors[pi][0], uv1 = c1.colors[pi][1];
    auto path_vertex = [&](int t) {  // vertex t along u = 0 .. v = length
        if (t == 0) return u;
        if (t == length) return v;
        return inner[t - 1];
    };
    ExpansionBranch branch;
    if (uv0 == uv1) {
        // case 1: uv was monochromatic; orient so u dodges blue degree 4 and
        // v dodges blue degree 2 (in the uv color's role)
        branch = ExpansionBranch::Case1;
        int m = uv0, o = other(uv0);
        int du = color_degree(g1d, c1, u, m), dv = color_degree(g1d, c1, v, m);
        // orientation must avoid m-degree 4 at the u end and 2 at the v end
        bool flip = !(du != 4 && dv != 2);
        auto pv = [&](int t) { return flip ? path_vertex(length - t) : path_vertex(t); };
        auto set_edge = [&](int t, M mm) {
            int a = pv(t), b = pv(t + 1);
            c.set_multiedge(g2, std::min(a, b), std::max(a, b), mm.a, mm.b);
        };
        // three m-m multiedges: at u, the next one, and at v
        set_edge(0, mono(m));
        set_edge(1, mono(m));
        set_edge(length - 1, mono(m));
        // the rest is a path of length l-3 colored by the o/m standard rules
        int rest = length - 3;
        int t0 = 2;  // first uncolored index
        std::vector<M> fill;
        auto standard_rr = [&](int seg) {
            for (int t = 0; t < seg; ++t) fill.push_back(mono((t / 2) % 2 == 0 ? o : m));
        };
        switch (rest % 4) {
            case 2: standard_rr(rest); break;
            case 3:
                fill.push_back(mixed());
                standard_rr(rest - 1);
                break;
            case 0:
                fill.push_back(mixed());
                fill.push_back(mixed());
                standard_rr(rest - 2);
                break;
            case 1:
                fill.push_back(mixed());
                fill.push_back(mixed());
                fill.push_back(mono(m));
                standard_rr(rest - 3);
                break;
        }
        for (int i = 0; i < (int)fill.size(); ++i) set_edge(t0 + i, fill[i]);
    } else {
        // case 2: uv was red-blue; normalize red degrees r_u < r_v
        int ru = color_degree(g1d, c1, u, RED), rv = color_degree(g1d, c1, v, RED);
        if (ru == rv) throw error("base coloring has equal red degrees across a red-blue edge");
        bool flip = ru > rv;
        if (flip) std::swap(ru, rv);
        auto pv = [&](int t) { return flip ? path_vertex(length - t) : path_vertex(t); };
        auto set_edge = [&](int t, M mm) {
            int a = pv(t), b = pv(t + 1);
            c.set_multiedge(g2, std::min(a, b), std::max(a, b), mm.a, mm.b);
        };
        Pattern pat;
        int base_l = length <= 8 ? length : 5 + (length - 5) % 4;
        if (ru == 3) {
            branch = ExpansionBranch::Case22;
            pat = subcase22(base_l);
        } else if (rv == 3) {
            branch = ExpansionBranch::Case23;
            pat = subcase23(base_l);
        } else {
            branch = ExpansionBranch::Case21;
            pat = subcase21(base_l);
        }
        std::vector<M> cols = length == base_l ? pat.edges : stretch(pat, length, base_l);
        if ((int)cols.size() != length) throw error("pattern length mismatch");
        for (int t = 0; t < length; ++t) set_edge(t, cols[t]);
    }

    return {std::move(g), std::move(c), branch};
}

}  // namespace lir
