#include "lir/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lir {

bool DecompElement::contains_vertex(int v) const {
    for (auto [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

int DecompElement::edges_at(int v) const {
    int c = 0;
    for (auto [a, b] : edges)
        if (a == v || b == v) ++c;
    return c;
}

namespace {

std::pair<int, int> norm(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

DecompElement make_p3(int a, int mid, int b) {
    DecompElement e;
    e.kind = ElementKind::P3;
    e.edges = {norm(a, mid), norm(mid, b)};
    e.central = mid;
    e.pendants = {std::min(a, b), std::max(a, b)};
    return e;
}

// Pairs up the edges of a connected graph of even size into paths of length
// two: root a spanning tree, then sweep vertices deepest-first, pairing the
// edges charged to each vertex and pushing an odd leftover up the tree edge.
bool p3_decompose_component(const Multigraph& g, const std::vector<int>& comp, int root,
                            std::vector<DecompElement>& out) {
    std::vector<char> inside(g.n, 0);
    for (int v : comp) inside[v] = 1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& p : g.pairs)
        if (inside[p.u] && inside[p.v]) edges.push_back({p.u, p.v});
    if (edges.empty()) return true;
    if (edges.size() % 2 != 0) return false;

    // BFS tree from the root
    std::map<int, int> parent;
    std::vector<int> order;
    parent[root] = -1;
    order.push_back(root);
    for (size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int w : g.neighbors(v)) {
            if (!inside[w] || parent.count(w)) continue;
            parent[w] = v;
            order.push_back(w);
        }
    }
    if (order.size() != comp.size()) return false;  // disconnected

    std::set<std::pair<int, int>> tree;
    for (int v : order)
        if (parent[v] >= 0) tree.insert(norm(v, parent[v]));

    // Charge every non-tree edge to the endpoint visited later.
    std::map<int, int> pos;
    for (int i = 0; i < (int)order.size(); ++i) pos[order[i]] = i;
    std::map<int, std::vector<int>> charged;  // vertex -> other endpoints
    for (auto [u, v] : edges) {
        if (tree.count(norm(u, v))) continue;
        int late = pos[u] > pos[v] ? u : v;
        charged[late].push_back(late == u ? v : u);
    }

    std::vector<int> sweep = order;
    std::reverse(sweep.begin(), sweep.end());
    for (int v : sweep) {
        std::vector<int>& avail = charged[v];
        std::sort(avail.begin(), avail.end());
        while (avail.size() >= 2) {
            int a = avail.back();
            avail.pop_back();
            int b = avail.back();
            avail.pop_back();
            out.push_back(make_p3(a, v, b));
        }
        if (parent[v] >= 0) {
            if (avail.size() == 1) {
                out.push_back(make_p3(avail.front(), v, parent[v]));
                avail.clear();
            } else {
                charged[parent[v]].push_back(v);  // pass the tree edge up
            }
        } else if (!avail.empty()) {
            return false;  // root leftover; cannot happen for even size
        }
    }
    return true;
}

bool p3_decompose(const Multigraph& g, const std::vector<std::pair<int, int>>& removed, int root,
                  std::vector<DecompElement>& out) {
    // Build the remainder graph and decompose each component.
    std::set<std::pair<int, int>> gone(removed.begin(), removed.end());
    std::vector<EdgeInput> edges;
    for (const auto& p : g.pairs)
        if (!gone.count(norm(p.u, p.v))) edges.push_back({p.u, p.v, 1});
    Multigraph rest = Multigraph::from_edges(g.n, edges);
    for (const auto& comp : rest.components()) {
        long long m = 0;
        std::vector<char> inside(rest.n, 0);
        for (int v : comp) inside[v] = 1;
        for (const auto& p : rest.pairs)
            if (inside[p.u] && inside[p.v]) ++m;
        if (m % 2 != 0) return false;
        int r = std::binary_search(comp.begin(), comp.end(), root) ? root : comp[0];
        if (!p3_decompose_component(rest, comp, r, out)) return false;
    }
    return true;
}

DecompElement make_k13(int hub, const std::vector<int>& leaves) {
    DecompElement e;
    e.kind = ElementKind::K13;
    for (int l : leaves) e.edges.push_back(norm(hub, l));
    std::sort(e.edges.begin(), e.edges.end());
    e.central = hub;
    e.pendants = leaves;
    std::sort(e.pendants.begin(), e.pendants.end());
    return e;
}

DecompElement make_k13dd(int hub, int leaf, int b1, int b2, int c1, int c2) {
    DecompElement e;
    e.kind = ElementKind::K13dd;
    e.edges = {norm(hub, leaf), norm(hub, b1), norm(b1, b2), norm(hub, c1), norm(c1, c2)};
    std::sort(e.edges.begin(), e.edges.end());
    e.central = hub;
    e.pendants = {leaf, b2, c2};
    std::sort(e.pendants.begin(), e.pendants.end());
    return e;
}

// Signature for deduplicating candidate decompositions.
std::string signature(const PertinentDecomposition& d) {
    std::vector<std::string> parts;
    for (const auto& el : d.elements) {
        std::string s = std::to_string((int)el.kind) + "@" + std::to_string(el.central) + ":";
        for (auto [u, v] : el.edges) s += std::to_string(u) + "-" + std::to_string(v) + ",";
        parts.push_back(s);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) out += p + ";";
    return out;
}

void push_candidate(std::vector<PertinentDecomposition>& out, std::set<std::string>& seen,
                    PertinentDecomposition d) {
    std::string sig = signature(d);
    if (seen.insert(sig).second) out.push_back(std::move(d));
}

}  // namespace

std::vector<PertinentDecomposition> pertinent_decompositions(const Multigraph& g, int limit) {
    if (!g.is_simple()) throw error("pertinent decomposition expects a simple graph");
    if (!g.is_connected()) throw error("pertinent decomposition expects a connected graph");
    long long m = (long long)g.pairs.size();

    std::vector<PertinentDecomposition> out;
    std::set<std::string> seen;

    if (m % 2 == 0) {
        // even size: paths of length two always suffice; vary the tree root
        for (int root = 0; root < g.n && (int)out.size() < limit; ++root) {
            PertinentDecomposition d;
            if (!p3_decompose(g, {}, root, d.elements)) continue;
            d.strongly_pertinent = true;
            push_candidate(out, seen, std::move(d));
        }
        return out;
    }

    // odd size: exactly one star-like element. All K13 placements come
    // before any K13'' so that using K13'' certifies it was unavoidable.
    for (int hub = 0; hub < g.n; ++hub) {
        if (g.simple_degree(hub) != 3) continue;
        auto nb = g.neighbors(hub);
        DecompElement star = make_k13(hub, nb);
        for (int root = 0; root < g.n && (int)out.size() < limit; ++root) {
            PertinentDecomposition d;
            std::vector<DecompElement> rest;
            if (!p3_decompose(g, star.edges, root, rest)) continue;
            d.elements = std::move(rest);
            d.special = (int)d.elements.size();
            d.elements.push_back(star);
            d.strongly_pertinent = true;
            push_candidate(out, seen, std::move(d));
        }
    }
    if (!out.empty()) return out;

    for (int hub = 0; hub < g.n; ++hub) {
        if (g.simple_degree(hub) != 3) continue;
        auto nb = g.neighbors(hub);
        for (int leaf_pick = 0; leaf_pick < 3; ++leaf_pick) {
            int leaf = nb[leaf_pick];
            int b1 = nb[(leaf_pick + 1) % 3], c1 = nb[(leaf_pick + 2) % 3];
            if (b1 > c1) std::swap(b1, c1);
            for (int b2 : g.neighbors(b1)) {
                if (b2 == hub) continue;
                for (int c2 : g.neighbors(c1)) {
                    if (c2 == hub) continue;
                    std::set<int> verts{hub, leaf, b1, b2, c1, c2};
                    if (verts.size() != 6) continue;
                    DecompElement star = make_k13dd(hub, leaf, b1, b2, c1, c2);
                    for (int root = 0; root < g.n && (int)out.size() < limit; ++root) {
                        PertinentDecomposition d;
                        std::vector<DecompElement> rest;
                        if (!p3_decompose(g, star.edges, root, rest)) continue;
                        d.elements = std::move(rest);
                        d.special = (int)d.elements.size();
                        d.elements.push_back(star);
                        d.strongly_pertinent = true;
                        push_candidate(out, seen, std::move(d));
                    }
                }
            }
        }
    }
    return out;
}

PertinentDecomposition pertinent_decomposition(const Multigraph& g) {
    auto all = pertinent_decompositions(g, 1);
    if (all.empty()) throw error("no pertinent decomposition exists");
    return all.front();
}

bool decomposition_valid(const Multigraph& g, const PertinentDecomposition& d) {
    std::set<std::pair<int, int>> covered;
    int specials = 0;
    for (size_t e = 0; e < d.elements.size(); ++e) {
        const DecompElement& el = d.elements[e];
        for (auto [u, v] : el.edges) {
            if (g.pair_index(u, v) < 0) return false;
            if (!covered.insert(norm(u, v)).second) return false;  // reused edge
        }
        std::map<int, int> deg;
        for (auto [u, v] : el.edges) {
            deg[u]++;
            deg[v]++;
        }
        switch (el.kind) {
            case ElementKind::P3:
                if (el.edges.size() != 2 || deg[el.central] != 2) return false;
                break;
            case ElementKind::K13:
                if (el.edges.size() != 3 || deg[el.central] != 3) return false;
                break;
            case ElementKind::K13dd: {
                if (el.edges.size() != 5 || deg[el.central] != 3) return false;
                int ones = 0, twos = 0;
                for (auto [v, k] : deg)
                    if (k == 1) ++ones;
                    else if (k == 2) ++twos;
                if (ones != 3 || twos != 2 || deg.size() != 6) return false;  // 3 tips, 2 mid, hub
                break;
            }
        }
        if (el.kind != ElementKind::P3) {
            ++specials;
            if (!d.special || *d.special != (int)e) return false;
        }
    }
    if (specials > 1) return false;
    if (d.special && specials == 0) return false;
    return covered.size() == g.pairs.size();
}

}  // namespace lir
