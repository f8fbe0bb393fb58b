#include <doctest.h>

#include <algorithm>
#include <set>

#include "lir/families.hpp"
#include "lir/iso.hpp"

using namespace lir;

namespace {

// Independent brute-force enumerator: every edge subset, connectivity and
// degree filters, dedup by trying all vertex permutations.
std::vector<Multigraph> brute_connected(int n, int max_degree) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<int> perm(n);
    std::vector<std::set<std::pair<int, int>>> found;
    std::vector<Multigraph> out;
    for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
        std::vector<EdgeInput> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second, 1});
        Multigraph g = Multigraph::from_edges(n, edges);
        if (!g.is_connected()) continue;
        if (max_degree > 0 && g.max_degree() > max_degree) continue;
        // canonical edge set = min over all permutations
        std::set<std::pair<int, int>> best;
        for (int i = 0; i < n; ++i) perm[i] = i;
        bool first = true;
        do {
            std::set<std::pair<int, int>> cur;
            for (const auto& p : g.pairs) {
                int a = perm[p.u], b = perm[p.v];
                cur.insert({std::min(a, b), std::max(a, b)});
            }
            if (first || cur < best) best = cur;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(found.begin(), found.end(), best) == found.end()) {
            found.push_back(best);
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cycle and random-regular generators meet their degree contracts") {
    Multigraph c5 = make_cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Multigraph r = random_regular(8, 3, 42);
    CHECK(r.is_connected());
    CHECK(r.pairs.size() == 12);
    for (int v = 0; v < 8; ++v) CHECK(r.degree(v) == 3);

    CHECK_THROWS_AS(random_regular(5, 3, 1), error);  // odd n*d
}

TEST_CASE("connected enumeration matches the brute-force oracle") {
    // known counts: 1, 1, 2, 6, 21, 112 connected graphs on 1..6 vertices
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto fast = enumerate_connected(n);
        CHECK((int)fast.size() == expected[n]);
        auto slow = brute_connected(n, -1);
        CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("subcubic enumeration matches the brute-force oracle and is duplicate-free") {
    for (int n = 1; n <= 6; ++n) {
        auto fast = enumerate_connected_subcubic(n);
        auto slow = brute_connected(n, 3);
        CHECK(fast.size() == slow.size());
        for (const auto& g : fast) CHECK(g.max_degree() <= 3);
        for (size_t i = 0; i < fast.size(); ++i)
            for (size_t j = i + 1; j < fast.size(); ++j) CHECK(!are_isomorphic(fast[i], fast[j]));
    }
}

TEST_CASE("cubic counts match the literature values") {
    CHECK(enumerate_connected_cubic(4).size() == 1);   // K4
    CHECK(enumerate_connected_cubic(6).size() == 2);   // K33 and the prism
    CHECK(enumerate_connected_cubic(8).size() == 5);
}

TEST_CASE("split construction produces a split graph shape") {
    Multigraph g = make_split(4, {2, 1, 0, 0});
    CHECK(g.n == 7);
    CHECK(g.pairs.size() == 6 + 3);
    CHECK(g.degree(0) == 3 + 2);
}

TEST_CASE("subdividing a cubic graph yields the bipartite base family") {
    for (const auto& h : enumerate_connected_cubic(6)) {
        Multigraph s = subdivide_all(h);
        CHECK(s.n == h.n + (int)h.pairs.size());
        CHECK(s.bipartition().has_value());
        for (int v = 0; v < s.n; ++v) CHECK((s.degree(v) == 2 || s.degree(v) == 3));
    }
}
