#include "lir/lift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lir/verifier.hpp"

namespace lir {

namespace {

// phi colors 1,2,3 double as blue, green, red.
int lift_color(int phi_color) {
    switch (phi_color) {
        case 1: return BLUE;
        case 2: return GREEN;
        case 3: return RED;
    }
    throw error("no lift color for phi color " + std::to_string(phi_color));
}

struct ElementIndex {
    std::vector<std::vector<int>> at_vertex;          // vertex -> element ids
    std::map<std::pair<int, int>, int> edge_owner;    // edge -> element id

    ElementIndex(const Multigraph& g, const PertinentDecomposition& d) {
        at_vertex.assign(g.n, {});
        for (int e = 0; e < (int)d.elements.size(); ++e) {
            std::set<int> verts;
            for (auto [u, v] : d.elements[e].edges) {
                edge_owner[{u, v}] = e;
                verts.insert(u);
                verts.insert(v);
            }
            for (int v : verts) at_vertex[v].push_back(e);
        }
    }

    int owner(int u, int v) const {
        auto it = edge_owner.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
        if (it == edge_owner.end()) throw error("edge not covered by any element");
        return it->second;
    }
};

}  // namespace

EdgeColoring lift_step1(const Multigraph& g, const PertinentDecomposition& d,
                        const ElementColoring& phi) {
    Multigraph g2 = doubled(g);
    EdgeColoring c = EdgeColoring::blank(g2);
    for (size_t e = 0; e < d.elements.size(); ++e) {
        if (phi.phi[e] == 4) continue;
        int col = lift_color(phi.phi[e]);
        for (auto [u, v] : d.elements[e].edges) c.set_multiedge(g2, u, v, col, col);
    }
    return c;
}

EdgeColoring lift_double_3(const Multigraph& g, const PertinentDecomposition& d,
                           const ElementColoring& phi) {
    if (g.max_degree() > 3) throw error("lift applies to subcubic graphs");
    Multigraph g2 = doubled(g);
    EdgeColoring c = lift_step1(g, d, phi);
    ElementIndex index(g, d);

    // Group the color-4 elements into components of the color-4 subgraph.
    std::vector<int> e4;
    for (int e = 0; e < (int)d.elements.size(); ++e)
        if (phi.phi[e] == 4) e4.push_back(e);
    std::map<int, int> comp_of;  // element -> component id
    {
        // union by shared vertices
        std::map<int, int> root;
        for (int e : e4) root[e] = e;
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (size_t i = 0; i < e4.size(); ++i)
            for (size_t j = i + 1; j < e4.size(); ++j) {
                const auto& a = d.elements[e4[i]];
                const auto& b = d.elements[e4[j]];
                bool touch = false;
                for (auto [u, v] : a.edges)
                    if (b.contains_vertex(u) || b.contains_vertex(v)) touch = true;
                if (touch) root[find(e4[i])] = find(e4[j]);
            }
        for (int e : e4) comp_of[e] = find(e);
    }
    std::map<int, std::vector<int>> comps;
    for (int e : e4) comps[comp_of[e]].push_back(e);

    for (auto& [key, elems] : comps) {
        if (elems.size() == 1) {
            // shape (a): a lone path of length two
            const DecompElement& p = d.elements[elems[0]];
            if (p.kind != ElementKind::P3) throw error("color-4 element is not a path (phi not minimal)");
            int center = p.central;
            int pick[2];
            if (g.simple_degree(center) == 3) {
                // the third edge at the center decides the avoided color
                int q = -1;
                for (int w : g.neighbors(center)) {
                    int owner = index.owner(center, w);
                    if (owner != elems[0]) q = owner;
                }
                if (q < 0) throw error("missing neighbor element at path center");
                if (phi.phi[q] == 4) throw error("adjacent color-4 element outside component");
                int avoid = lift_color(phi.phi[q]);
                int k = 0;
                for (int col : {RED, BLUE, GREEN})
                    if (col != avoid) pick[k++] = col;
            } else {
                pick[0] = RED;
                pick[1] = BLUE;
            }
            for (auto [u, v] : p.edges) c.set_multiedge(g2, u, v, pick[0], pick[1]);
            continue;
        }
        if (elems.size() != 2) throw error("color-4 component has too many elements (phi not minimal)");

        // shape (b): the element whose central vertex carries three component
        // edges is p1; the other is p2 and p1's center is a pendant of it.
        std::map<int, int> deg4;
        for (int e : elems)
            for (auto [u, v] : d.elements[e].edges) {
                deg4[u]++;
                deg4[v]++;
            }
        int spider = -1;
        for (auto [v, k] : deg4)
            if (k == 3) spider = v;
        int p1 = -1, p2 = -1;
        for (int e : elems)
            if (d.elements[e].central == spider) p1 = e;
        if (spider < 0 || p1 < 0) throw error("color-4 component is not the spider shape");
        p2 = elems[0] == p1 ? elems[1] : elems[0];
        if (!d.elements[p2].contains_vertex(spider)) throw error("spider center not on the second element");
        if (d.elements[p1].kind != ElementKind::P3 || d.elements[p2].kind != ElementKind::P3)
            throw error("color-4 component uses a star element (phi not minimal)");

        // classify p1's two pendant sides
        struct SideInfo {
            int vertex = -1;
            std::vector<int> single;  // elements with one edge here
            int dbl = -1;             // element with two edges here
        };
        SideInfo sides[2];
        for (int s = 0; s < 2; ++s) {
            int a = d.elements[p1].pendants[s];
            sides[s].vertex = a;
            for (int e : index.at_vertex[a]) {
                if (e == p1) continue;
                int k = d.elements[e].edges_at(a);
                if (k >= 2) sides[s].dbl = e;
                else sides[s].single.push_back(e);
            }
        }
        auto side_colors = [&](const SideInfo& s) {
            std::set<int> cols;
            if (s.dbl >= 0) cols.insert(phi.phi[s.dbl]);
            for (int e : s.single) cols.insert(phi.phi[e]);
            return cols;
        };

        bool dbl0 = sides[0].dbl >= 0, dbl1 = sides[1].dbl >= 0;
        if (dbl0 != dbl1) {
            // case 1: one pendant hosts a centered element s1, the other two
            // pendant-attached ones s2, s3
            const SideInfo& sA = dbl0 ? sides[0] : sides[1];
            const SideInfo& sB = dbl0 ? sides[1] : sides[0];
            if (sB.single.size() != 2 || sB.dbl >= 0)
                throw error("case 1 side structure missing (phi not minimal)");
            int c1 = phi.phi[sA.dbl];
            int f = phi.phi[sB.single[0]], h = phi.phi[sB.single[1]];
            int c2 = std::min(f, h), c3 = std::max(f, h);
            if (c1 == 4 || c2 == 4 || c3 == 4 || c2 == c3 || c1 == c2 || c1 == c3)
                throw error("case 1 colors do not cover {1,2,3} (phi not minimal)");
            // both multiedges of p1 get {L(c1), L(c3)}, p2 gets {L(c1), L(c2)}
            for (auto [u, v] : d.elements[p1].edges)
                c.set_multiedge(g2, u, v, lift_color(c1), lift_color(c3));
            for (auto [u, v] : d.elements[p2].edges)
                c.set_multiedge(g2, u, v, lift_color(c1), lift_color(c2));
        } else if (!dbl0 && !dbl1) {
            // case 2: both pendants carry two pendant-attached elements; the
            // two sides share exactly one color
            if (sides[0].single.size() != 2 || sides[1].single.size() != 2)
                throw error("case 2 side structure missing (phi not minimal)");
            auto ca = side_colors(sides[0]);
            auto cb = side_colors(sides[1]);
            std::vector<int> shared;
            std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1 || ca.size() != 2 || cb.size() != 2)
                throw error("case 2 color pattern missing (phi not minimal)");
            int y_spec = -1, z_spec = -1;
            for (int col : ca)
                if (col != shared[0]) y_spec = col;
            for (int col : cb)
                if (col != shared[0]) z_spec = col;
            if (y_spec == 4 || z_spec == 4 || shared[0] == 4)
                throw error("case 2 colors include 4 (phi not minimal)");
            // side-A multiedge doubled in the B-specific color and vice
            // versa; p2 mixes the two specifics
            int a = sides[0].vertex, b = sides[1].vertex;
            c.set_multiedge(g2, spider, a, lift_color(z_spec), lift_color(z_spec));
            c.set_multiedge(g2, spider, b, lift_color(y_spec), lift_color(y_spec));
            for (auto [u, v] : d.elements[p2].edges)
                c.set_multiedge(g2, u, v, lift_color(y_spec), lift_color(z_spec));
        } else {
            throw error("both pendants host centered elements (phi not minimal)");
        }
    }

    if (!c.is_total(g2)) throw error("lift left copies uncolored");
    return c;
}

}  // namespace lir
