#include "lir/regular.hpp"


#include "lir/oracle.hpp"
#include "lir/verifier.hpp"

namespace lir {

EdgeColoring color_regular_double(const Multigraph& g, const search_budget& budget) {
    if (!g.is_simple()) throw error("regular construction expects a simple graph");
    if (!g.is_connected()) throw error("regular construction expects a connected graph");
    if (!g.is_regular()) throw error("regular construction expects a regular graph");
    if (g.n == 0) return EdgeColoring{};
    if (g.degree(0) < 2) throw error("regular construction needs degree >= 2 (K2 is excluded)");

    NsdColoring psi = find_nsd_123(g, /*shift=*/true, budget);
    Multigraph g2 = doubled(g);
    EdgeColoring c = EdgeColoring::blank(g2);
    for (size_t i = 0; i < g.pairs.size(); ++i) {
        switch (psi.weight[i]) {
            case 0: c.colors[i] = {BLUE, BLUE}; break;
            case 1: c.colors[i] = {RED, BLUE}; break;
            case 2: c.colors[i] = {RED, RED}; break;
            default: throw error("shifted weight out of range");
        }
    }
    // The red degree of each vertex equals its shifted weight sum; that is
    // what makes adjacent red degrees differ, so it is checked outright.
    for (int v = 0; v < g2.n; ++v)
        if (color_degree(g2, c, v, RED) != psi.vertex_sum[v])
            throw error("red degree does not match the shifted weight sum");
    return c;
}

}  // namespace lir
