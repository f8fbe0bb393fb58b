#include <doctest.h>

#include "lir/families.hpp"
#include "lir/oracle.hpp"
#include "lir/verifier.hpp"

using namespace lir;

TEST_CASE("small uncolorable graphs") {
    // K2, K3, P4 and the doubled K2 admit no locally irregular coloring
    auto value = [](const Multigraph& g) { return exact_lir(g, (int)g.copy_count()); };
    CHECK(!value(make_path(1)).colorable);
    CHECK(!value(make_complete(3)).colorable);
    CHECK(!value(make_path(3)).colorable);
    CHECK(!value(doubled(make_path(1))).colorable);
}

TEST_CASE("decision search on documented instances") {
    CHECK(find_lir_coloring(doubled(make_path(5)), 2).has_value());
    CHECK(!find_lir_coloring(make_complete(3), 1).has_value());
    for (int n = 3; n <= 8; ++n) {
        auto c = find_lir_coloring(doubled(make_complete(n)), 2);
        REQUIRE(c.has_value());
        CHECK(verify(doubled(make_complete(n)), *c).ok);
    }
}

TEST_CASE("exact value certification on small fixtures") {
    auto p5 = exact_lir(make_path(4), 4);
    CHECK(p5.colorable);
    CHECK(p5.value == 2);  // paths of length != 1,3 need exactly two colors
    REQUIRE(p5.witness.has_value());
    CHECK(verify(make_path(4), *p5.witness).ok);

    auto star = exact_lir(make_star(3), 3);
    CHECK(star.colorable);
    CHECK(star.value == 1);  // stars are locally irregular already
}

TEST_CASE("budget errors are distinct and never a wrong answer") {
    search_budget tiny{5};
    CHECK_THROWS_AS(find_lir_coloring(doubled(make_complete(6)), 2, tiny), budget_error);
    CHECK_THROWS_AS(exact_lir(make_bowtie(), 2, tiny), budget_error);
}

TEST_CASE("doubles of small connected graphs need at most two colors") {
    // direct check of the conjecture on every connected simple G, n <= 5
    for (int n = 1; n <= 5; ++n)
        for (const Multigraph& g : enumerate_connected(n)) {
            if (g.n == 2) continue;  // K2 is the lone exception
            auto res = exact_lir(doubled(g), 2);
            CHECK(res.colorable);
            CHECK(res.value <= 2);
            CHECK(verify(doubled(g), *res.witness).ok);
        }
}

TEST_CASE("nsd weighting with {1,2,3} on small graphs") {
    auto nsd = find_nsd_123(make_complete(3));
    for (const auto& p : make_complete(3).pairs)
        CHECK(nsd.vertex_sum[p.u] != nsd.vertex_sum[p.v]);

    CHECK_THROWS_AS(find_nsd_123(make_path(1)), error);  // isolated edge

    for (int n = 3; n <= 7; ++n)
        for (const Multigraph& g : enumerate_connected(n)) {
            auto w = find_nsd_123(g);
            for (size_t i = 0; i < g.pairs.size(); ++i) {
                CHECK(w.weight[i] >= 1);
                CHECK(w.weight[i] <= 3);
            }
            for (const auto& p : g.pairs) CHECK(w.vertex_sum[p.u] != w.vertex_sum[p.v]);
        }
}

TEST_CASE("shifted weights stay in {0,1,2}") {
    auto w = find_nsd_123(make_cycle(5), true);
    for (int x : w.weight) {
        CHECK(x >= 0);
        CHECK(x <= 2);
    }
}

TEST_CASE("proper vertex coloring finds chromatic numbers") {
    CHECK(chromatic_number(make_cycle(4), 4) == 2);
    CHECK(chromatic_number(make_complete(4), 4) == 4);
    CHECK(chromatic_number(make_cycle(5), 4) == 3);
    // Petersen graph
    std::vector<EdgeInput> pe;
    for (int i = 0; i < 5; ++i) {
        pe.push_back({i, (i + 1) % 5, 1});
        pe.push_back({i, i + 5, 1});
        pe.push_back({i + 5, (i + 2) % 5 + 5, 1});
    }
    CHECK(chromatic_number(Multigraph::from_edges(10, pe), 4) == 3);
    CHECK(!proper_vertex_coloring(make_complete(5), 4).has_value());
}

TEST_CASE("witnesses always verify and minimality is certified") {
    for (const Multigraph& g : enumerate_connected(4)) {
        auto res = exact_lir(doubled(g), 2);
        if (!res.colorable) continue;
        CHECK(verify(doubled(g), *res.witness).ok);
        if (res.value == 2) {
            // k = 1 must genuinely fail, i.e. the double is not locally irregular
            CHECK(!find_lir_coloring(doubled(g), 1).has_value());
        }
    }
}
