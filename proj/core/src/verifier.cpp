#include "lir/verifier.hpp"

#include <algorithm>

#include "lir/decomposition.hpp"
#include "lir/phi.hpp"

namespace lir {

ConflictReport verify(const Multigraph& g, const EdgeColoring& c) {
    if (!c.is_total(g)) throw error("verify requires a total coloring");
    ColorDegreeProfile prof = color_degree_profile(g, c);
    ConflictReport report;
    for (size_t i = 0; i < g.pairs.size(); ++i) {
        const auto& p = g.pairs[i];
        int cols[2] = {c.colors[i][0], p.mult == 2 ? c.colors[i][1] : 0};
        if (cols[1] == cols[0]) cols[1] = 0;  // same color twice, check once
        for (int col : cols)
            if (col > 0 && prof.degree[p.u][col] == prof.degree[p.v][col])
                report.conflicts.push_back({p.u, p.v, col});
    }
    std::sort(report.conflicts.begin(), report.conflicts.end(), [](const Conflict& a, const Conflict& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.color < b.color;
    });
    report.conflicts.erase(std::unique(report.conflicts.begin(), report.conflicts.end()),
                           report.conflicts.end());
    report.ok = report.conflicts.empty();
    return report;
}

bool verify_property_P(const Multigraph& g2, const EdgeColoring& c,
                       const PertinentDecomposition& d, const ElementColoring& phi) {
    if (phi.phi.size() != d.elements.size()) throw error("phi missing for some element");
    auto used = c.colors_used();
    for (size_t e = 0; e < d.elements.size(); ++e) {
        if (phi.phi[e] < 1 || phi.phi[e] > 4) throw error("phi missing for some element");
        if (phi.phi[e] == 4) continue;
        for (int v : d.elements[e].pendants)
            for (int col : used)
                if (color_degree_partial(g2, c, v, col) == 5) return false;
    }
    return true;
}

bool verify_pendant_invariant(const Multigraph& g2, const EdgeColoring& c) {
    if (!g2.is_two_multigraph()) throw error("pendant invariant applies to 2-multigraphs");
    if (!c.is_total(g2)) throw error("pendant invariant requires a total coloring");
    for (int col : c.colors_used())
        if (col != RED && col != BLUE) throw error("pendant invariant applies to the {red, blue} palette");
    ColorDegreeProfile prof = color_degree_profile(g2, c);
    auto deg_pair = [&](int v) {
        int r = (int)prof.degree[v].size() > RED ? prof.degree[v][RED] : 0;
        int b = (int)prof.degree[v].size() > BLUE ? prof.degree[v][BLUE] : 0;
        return std::pair<int, int>(r, b);
    };
    for (size_t i = 0; i < g2.pairs.size(); ++i) {
        const auto& p = g2.pairs[i];
        bool pendant = g2.degree(p.u) == 2 || g2.degree(p.v) == 2;
        if (!pendant) continue;
        bool red_blue = (c.colors[i][0] == RED && c.colors[i][1] == BLUE) ||
                        (c.colors[i][0] == BLUE && c.colors[i][1] == RED);
        if (!red_blue) continue;
        for (int v : {p.u, p.v}) {
            auto [r, b] = deg_pair(v);
            if (r == 3 && b == 3) return false;
        }
    }
    return true;
}

}  // namespace lir
