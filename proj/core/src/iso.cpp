#include "lir/iso.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lir {

namespace {

uint64_t mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// Iterated refinement: vertex code = hash of (own code, sorted multiset of
// (neighbor code, multiplicity)). Stabilizes in <= n rounds.
std::vector<uint64_t> wl_codes(const Multigraph& g) {
    std::vector<uint64_t> code(g.n);
    for (int v = 0; v < g.n; ++v) code[v] = (uint64_t)g.degree(v) * 1315423911ULL + 7;
    for (int round = 0; round < g.n; ++round) {
        std::vector<uint64_t> next(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<uint64_t> nb;
            nb.reserve(g.inc[v].size());
            for (int i : g.inc[v]) {
                int w = g.pairs[i].u == v ? g.pairs[i].v : g.pairs[i].u;
                nb.push_back(code[w] * 31 + (uint64_t)g.pairs[i].mult);
            }
            std::sort(nb.begin(), nb.end());
            uint64_t h = mix(0x12345678, code[v]);
            for (uint64_t x : nb) h = mix(h, x);
            next[v] = h;
        }
        if (next == code) break;
        code = std::move(next);
    }
    return code;
}

// Backtracking isomorphism search guided by the refinement codes.
struct IsoSearch {
    const Multigraph& a;
    const Multigraph& b;
    std::vector<uint64_t> ca, cb;
    std::vector<int> map_ab, map_ba;
    std::vector<int> order;  // vertices of a, most-constrained first

    IsoSearch(const Multigraph& a_, const Multigraph& b_) : a(a_), b(b_) {
        ca = wl_codes(a);
        cb = wl_codes(b);
        map_ab.assign(a.n, -1);
        map_ba.assign(b.n, -1);
        order.resize(a.n);
        for (int i = 0; i < a.n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
            return ca[x] < ca[y];
        });
    }

    bool feasible(int va, int vb) const {
        if (ca[va] != cb[vb]) return false;
        for (int i : a.inc[va]) {
            int wa = a.pairs[i].u == va ? a.pairs[i].v : a.pairs[i].u;
            int wb = map_ab[wa];
            if (wb >= 0 && b.multiplicity(vb, wb) != a.pairs[i].mult) return false;
        }
        for (int i : b.inc[vb]) {
            int wb = b.pairs[i].u == vb ? b.pairs[i].v : b.pairs[i].u;
            int wa = map_ba[wb];
            if (wa >= 0 && a.multiplicity(va, wa) != b.pairs[i].mult) return false;
        }
        return true;
    }

    bool extend(int k) {
        if (k == a.n) return true;
        int va = order[k];
        for (int vb = 0; vb < b.n; ++vb) {
            if (map_ba[vb] >= 0 || !feasible(va, vb)) continue;
            map_ab[va] = vb;
            map_ba[vb] = va;
            if (extend(k + 1)) return true;
            map_ab[va] = -1;
            map_ba[vb] = -1;
        }
        return false;
    }
};

}  // namespace

uint64_t iso_hash(const Multigraph& g) {
    auto code = wl_codes(g);
    std::sort(code.begin(), code.end());
    uint64_t h = mix(0xabcdef, (uint64_t)g.n);
    h = mix(h, (uint64_t)g.copy_count());
    for (uint64_t x : code) h = mix(h, x);
    return h;
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n || a.pairs.size() != b.pairs.size() || a.copy_count() != b.copy_count())
        return false;
    auto da = wl_codes(a), db = wl_codes(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    if (a.n == 0) return true;
    IsoSearch search(a, b);
    return search.extend(0);
}

std::vector<Multigraph> dedup_isomorphic(const std::vector<Multigraph>& graphs) {
    std::vector<Multigraph> out;
    std::unordered_map<uint64_t, std::vector<int>> buckets;
    for (const Multigraph& g : graphs) {
        uint64_t h = iso_hash(g);
        bool dup = false;
        for (int idx : buckets[h])
            if (are_isomorphic(out[idx], g)) {
                dup = true;
                break;
            }
        if (!dup) {
            buckets[h].push_back((int)out.size());
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace lir
