#include "lir/phi.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lir/families.hpp"
#include "lir/iso.hpp"
#include "lir/verifier.hpp"

namespace lir {

EdgeColoring induced_edge_coloring(const Multigraph& g, const PertinentDecomposition& d,
                                   const ElementColoring& phi) {
    EdgeColoring c = EdgeColoring::blank(g);
    for (size_t e = 0; e < d.elements.size(); ++e)
        for (auto [u, v] : d.elements[e].edges) c.set(g, u, v, 0, phi.phi[e]);
    return c;
}

namespace {

// Adjacency between elements plus the central-vertex compatibility bit:
// same-colored adjacent elements must meet at a central vertex of one of them.
struct ElementGraph {
    std::vector<std::vector<int>> adj;           // element -> adjacent elements
    std::vector<std::vector<char>> central_ok;   // parallel to adj
};

ElementGraph build_element_graph(const Multigraph& g, const PertinentDecomposition& d) {
    int k = (int)d.elements.size();
    std::vector<std::vector<int>> at_vertex(g.n);
    for (int e = 0; e < k; ++e) {
        std::set<int> verts;
        for (auto [u, v] : d.elements[e].edges) {
            verts.insert(u);
            verts.insert(v);
        }
        for (int v : verts) at_vertex[v].push_back(e);
    }
    ElementGraph eg;
    eg.adj.assign(k, {});
    eg.central_ok.assign(k, {});
    std::map<std::pair<int, int>, bool> seen;
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < at_vertex[v].size(); ++i)
            for (size_t j = i + 1; j < at_vertex[v].size(); ++j) {
                int a = at_vertex[v][i], b = at_vertex[v][j];
                bool ok = d.elements[a].central == v || d.elements[b].central == v;
                auto key = std::make_pair(std::min(a, b), std::max(a, b));
                auto it = seen.find(key);
                if (it == seen.end()) seen[key] = ok;
                else it->second = it->second && ok;  // every shared vertex must qualify
            }
    for (auto& [key, ok] : seen) {
        eg.adj[key.first].push_back(key.second);
        eg.central_ok[key.first].push_back(ok);
        eg.adj[key.second].push_back(key.first);
        eg.central_ok[key.second].push_back(ok);
    }
    return eg;
}

struct PhiSearch {
    const Multigraph& g;
    const PertinentDecomposition& d;
    ElementGraph eg;
    std::vector<int> phi;
    std::vector<int> best;
    int best_cost = -1;
    int cost = 0;

    PhiSearch(const Multigraph& g_, const PertinentDecomposition& d_) : g(g_), d(d_) {
        eg = build_element_graph(g, d);
        phi.assign(d.elements.size(), 0);
    }

    bool leaf_locally_irregular() const {
        ElementColoring ec;
        ec.phi = phi;
        EdgeColoring c = induced_edge_coloring(g, d, ec);
        return verify(g, c).ok;
    }

    void place(size_t e) {
        if (best_cost >= 0 && cost >= best_cost) return;  // bound
        if (e == phi.size()) {
            if (leaf_locally_irregular() && (best_cost < 0 || cost < best_cost)) {
                best_cost = cost;
                best = phi;
            }
            return;
        }
        bool special = d.special && *d.special == (int)e;
        for (int col = 1; col <= (special ? 1 : 4); ++col) {
            bool ok = true;
            for (size_t j = 0; j < eg.adj[e].size() && ok; ++j) {
                int other = eg.adj[e][j];
                if (other < (int)e && phi[other] == col && !eg.central_ok[e][j]) ok = false;
            }
            if (!ok) continue;
            phi[e] = col;
            int add = col == 4 ? (int)d.elements[e].edges.size() : 0;
            cost += add;
            place(e + 1);
            cost -= add;
            phi[e] = 0;
        }
    }
};

}  // namespace

ElementColoring find_phi(const Multigraph& g, const PertinentDecomposition& d) {
    auto out = try_find_phi(g, d);
    if (!out) throw error("no element coloring satisfies the constraints for this decomposition");
    return *out;
}

std::optional<ElementColoring> try_find_phi(const Multigraph& g, const PertinentDecomposition& d) {
    PhiSearch search(g, d);
    search.place(0);
    if (search.best_cost < 0) return std::nullopt;
    ElementColoring out;
    out.phi = search.best;
    out.color4_edge_count = search.best_cost;
    out.minimal4 = true;  // certified: the search exhausts all cheaper colorings
    return out;
}

std::pair<PertinentDecomposition, ElementColoring> decompose_and_color(const Multigraph& g) {
    auto candidates = pertinent_decompositions(g);
    if (candidates.empty()) throw error("no pertinent decomposition exists");
    for (auto& d : candidates) {
        auto phi = try_find_phi(g, d);
        if (phi) return {std::move(d), std::move(*phi)};
    }
    throw error("no candidate decomposition admits an element coloring");
}

namespace {

Multigraph shape_pattern(char shape) {
    switch (shape) {
        case 'a': return make_path(2);
        case 'b':  // paths of length two sharing a central/pendant vertex
            return Multigraph::from_edges(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}});
        case 'c':  // two degree-3 vertices joined by a path of length two
            return Multigraph::from_edges(
                7, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}});
        case 'd': return make_star(3);
        case 'e':  // star with two edges subdivided once
            return Multigraph::from_edges(6, {{0, 1, 1}, {0, 2, 1}, {2, 4, 1}, {0, 3, 1}, {3, 5, 1}});
        case 'f':  // (e) plus a path of length two at one tip
            return Multigraph::from_edges(8, {{0, 1, 1},
                                              {0, 2, 1},
                                              {2, 4, 1},
                                              {0, 3, 1},
                                              {3, 5, 1},
                                              {5, 6, 1},
                                              {5, 7, 1}});
        case 'g':  // (e) plus paths of length two at both tips
            return Multigraph::from_edges(10, {{0, 1, 1},
                                               {0, 2, 1},
                                               {2, 4, 1},
                                               {0, 3, 1},
                                               {3, 5, 1},
                                               {5, 6, 1},
                                               {5, 7, 1},
                                               {4, 8, 1},
                                               {4, 9, 1}});
        default: throw error("unknown shape");
    }
}

}  // namespace

std::vector<MonoComponent> classify_mono_components(const Multigraph& g,
                                                    const PertinentDecomposition& d,
                                                    const ElementColoring& phi) {
    EdgeColoring c = induced_edge_coloring(g, d, phi);
    std::vector<MonoComponent> out;
    for (int col = 1; col <= 4; ++col) {
        MonochromaticSubgraph mono = monochromatic_subgraph(g, c, col);
        for (const auto& comp : mono.g.components()) {
            Multigraph sub = mono.g.induced(comp);
            if (sub.pairs.empty()) continue;
            MonoComponent mc;
            mc.color = col;
            for (int v : comp) mc.vertices.push_back(mono.vertex_ids[v]);
            mc.shape = '?';
            for (char s : {'a', 'b', 'c', 'd', 'e', 'f', 'g'})
                if (are_isomorphic(sub, shape_pattern(s))) {
                    mc.shape = s;
                    break;
                }
            if (mc.shape == '?') throw error("monochromatic component matches no allowed shape");
            out.push_back(std::move(mc));
        }
    }
    return out;
}

}  // namespace lir
