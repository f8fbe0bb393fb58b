#include "lir/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lir/iso.hpp"

namespace lir {

Multigraph make_path(int length) {
    if (length < 1) throw error("path length must be >= 1");
    std::vector<EdgeInput> e;
    for (int i = 0; i < length; ++i) e.push_back({i, i + 1, 1});
    return Multigraph::from_edges(length + 1, e);
}

Multigraph make_cycle(int n) {
    if (n < 3) throw error("cycle needs n >= 3");
    std::vector<EdgeInput> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
    return Multigraph::from_edges(n, e);
}

Multigraph make_complete(int n) {
    std::vector<EdgeInput> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v, 1});
    return Multigraph::from_edges(n, e);
}

Multigraph make_star(int leaves) {
    std::vector<EdgeInput> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
    return Multigraph::from_edges(leaves + 1, e);
}

Multigraph make_wheel(int rim) {
    if (rim < 3) throw error("wheel needs rim >= 3");
    std::vector<EdgeInput> e;
    for (int i = 1; i <= rim; ++i) {
        e.push_back({0, i, 1});
        e.push_back({i, i % rim + 1, 1});
    }
    return Multigraph::from_edges(rim + 1, e);
}

Multigraph make_bowtie() {
    // Two centers, each carrying two triangles, joined by a bridge.
    std::vector<EdgeInput> e = {
        {0, 2, 1}, {0, 3, 1}, {2, 3, 1},  // left triangle A
        {0, 4, 1}, {0, 5, 1}, {4, 5, 1},  // left triangle B
        {0, 1, 1},                        // bridge
        {1, 6, 1}, {1, 9, 1}, {6, 9, 1},  // right triangle A
        {1, 7, 1}, {1, 8, 1}, {7, 8, 1},  // right triangle B
    };
    return Multigraph::from_edges(10, e);
}

Multigraph make_split(int n, const std::vector<int>& d) {
    if ((int)d.size() != n) throw error("split: need one pendant count per clique vertex");
    std::vector<EdgeInput> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v, 1});
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d[i]; ++j) e.push_back({i, next++, 1});
    return Multigraph::from_edges(next, e);
}

Multigraph subdivide_all(const Multigraph& g) {
    if (!g.is_simple()) throw error("subdivision expects a simple graph");
    std::vector<EdgeInput> e;
    int next = g.n;
    for (const auto& p : g.pairs) {
        e.push_back({p.u, next, 1});
        e.push_back({next, p.v, 1});
        ++next;
    }
    return Multigraph::from_edges(next, e);
}

Multigraph random_regular(int n, int d, uint64_t seed) {
    if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0) throw error("infeasible regular parameters");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<EdgeInput> e;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) ok = false;
            else {
                seen[u][v] = seen[v][u] = 1;
                e.push_back({u, v, 1});
            }
        }
        if (!ok) continue;
        Multigraph g = Multigraph::from_edges(n, e);
        if (g.is_connected()) return g;
    }
    throw error("random_regular: rejection sampling failed; parameters too tight");
}

Multigraph random_connected(int n, double edge_prob, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<EdgeInput> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < edge_prob) e.push_back({u, v, 1});
        Multigraph g = Multigraph::from_edges(n, e);
        if (g.is_connected()) return g;
    }
    throw error("random_connected: rejection sampling failed");
}

// Connected graphs are grown vertex by vertex: every connected graph has a
// build order in which each new vertex attaches to a nonempty subset of the
// earlier ones, so expanding every graph of order m by every admissible
// attachment subset and deduplicating reaches all of order m+1.
std::vector<Multigraph> enumerate_connected(int n, int max_degree) {
    int cap = max_degree > 0 ? 12 : 10;
    if (n < 1 || n > cap) throw error("enumeration is offered for small n only");
    std::vector<Multigraph> level{Multigraph::from_edges(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::vector<Multigraph> next;
        std::unordered_map<uint64_t, std::vector<int>> buckets;
        for (const Multigraph& h : level) {
            std::vector<int> room;
            for (int v = 0; v < h.n; ++v)
                if (max_degree < 0 || h.degree(v) < max_degree) room.push_back(v);
            int r = (int)room.size();
            for (int mask = 1; mask < (1 << r); ++mask) {
                int popcount = __builtin_popcount(mask);
                if (max_degree > 0 && popcount > max_degree) continue;
                std::vector<EdgeInput> e;
                for (const auto& p : h.pairs) e.push_back({p.u, p.v, 1});
                for (int b = 0; b < r; ++b)
                    if (mask & (1 << b)) e.push_back({room[b], m - 1, 1});
                Multigraph cand = Multigraph::from_edges(m, e);
                uint64_t hash = iso_hash(cand);
                bool dup = false;
                for (int idx : buckets[hash])
                    if (are_isomorphic(next[idx], cand)) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    buckets[hash].push_back((int)next.size());
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Multigraph> enumerate_connected_subcubic(int n) {
    return enumerate_connected(n, 3);
}

std::vector<Multigraph> enumerate_connected_cubic(int n) {
    std::vector<Multigraph> out;
    for (const Multigraph& g : enumerate_connected_subcubic(n)) {
        bool cubic = true;
        for (int v = 0; v < g.n && cubic; ++v) cubic = g.degree(v) == 3;
        if (cubic) out.push_back(g);
    }
    return out;
}

}  // namespace lir
