#include <doctest.h>

#include "lir/families.hpp"
#include "lir/multigraph.hpp"

using namespace lir;

TEST_CASE("doubling K2 and P3") {
    Multigraph k2 = make_path(1);
    Multigraph k2d = doubled(k2);
    CHECK(k2d.pairs.size() == 1);
    CHECK(k2d.pairs[0].mult == 2);
    CHECK(k2d.degree(0) == 2);
    CHECK(k2d.degree(1) == 2);

    Multigraph p3 = make_path(2);
    Multigraph p3d = doubled(p3);
    CHECK(p3d.degree(0) == 2);
    CHECK(p3d.degree(1) == 4);
    CHECK(p3d.degree(2) == 2);
}

TEST_CASE("doubling the bow-tie fixture") {
    Multigraph b = make_bowtie();
    CHECK(b.n == 10);
    CHECK(b.pairs.size() == 13);
    Multigraph bd = doubled(b);
    CHECK(bd.copy_count() == 26);
    CHECK(bd.degree(0) == 10);  // both centers have degree five before doubling
    CHECK(bd.degree(1) == 10);
}

TEST_CASE("doubling rejects a multigraph") {
    Multigraph g = Multigraph::from_edges(2, {{0, 1, 2}});
    CHECK_THROWS_AS(doubled(g), error);
}

TEST_CASE("no loops, no duplicate pairs, bounds checked") {
    CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 0, 1}}), error);
    CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 1, 1}, {1, 0, 1}}), error);
    CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 2, 1}}), error);
    CHECK_THROWS_AS(Multigraph::from_edges(2, {{0, 1, 3}}), error);
}

TEST_CASE("color degrees on small doubles") {
    Multigraph k2d = doubled(make_path(1));
    EdgeColoring c = EdgeColoring::blank(k2d);
    c.set_multiedge(k2d, 0, 1, RED, BLUE);
    CHECK(color_degree(k2d, c, 0, RED) == 1);
    CHECK(color_degree(k2d, c, 1, RED) == 1);

    Multigraph p3d = doubled(make_path(2));
    EdgeColoring cb = EdgeColoring::blank(p3d);
    cb.set_multiedge(p3d, 0, 1, BLUE, BLUE);
    cb.set_multiedge(p3d, 1, 2, BLUE, BLUE);
    CHECK(color_degree(p3d, cb, 0, BLUE) == 2);
    CHECK(color_degree(p3d, cb, 1, BLUE) == 4);
    CHECK(color_degree(p3d, cb, 2, BLUE) == 2);

    // partial colorings raise on the strict query but not the partial one
    EdgeColoring part = EdgeColoring::blank(p3d);
    part.set_multiedge(p3d, 0, 1, RED, RED);
    CHECK_THROWS_AS(color_degree(p3d, part, 1, RED), error);
    CHECK(color_degree_partial(p3d, part, 1, RED) == 2);
}

TEST_CASE("doubled triangle carrying the shifted-weight coloring") {
    // weights (1,2,3) on a triangle become blue-blue / red-blue / red-red
    Multigraph k3d = doubled(make_complete(3));
    EdgeColoring c = EdgeColoring::blank(k3d);
    c.set_multiedge(k3d, 0, 1, BLUE, BLUE);
    c.set_multiedge(k3d, 1, 2, RED, BLUE);
    c.set_multiedge(k3d, 0, 2, RED, RED);
    CHECK(color_degree(k3d, c, 0, RED) == 2);
    CHECK(color_degree(k3d, c, 1, RED) == 1);
    CHECK(color_degree(k3d, c, 2, RED) == 3);
    CHECK(color_degree(k3d, c, 0, BLUE) == 2);
    CHECK(color_degree(k3d, c, 1, BLUE) == 3);
    CHECK(color_degree(k3d, c, 2, BLUE) == 1);

    SUBCASE("monochromatic subgraph of the red class") {
        auto mono = monochromatic_subgraph(k3d, c, RED);
        CHECK(mono.g.n == 3);
        CHECK(mono.g.copy_count() == 3);
        int i12 = mono.g.pair_index(1, 2);  // bc keeps one red copy
        int i02 = mono.g.pair_index(0, 2);  // ca keeps both
        REQUIRE(i12 >= 0);
        REQUIRE(i02 >= 0);
        CHECK(mono.g.pairs[i12].mult == 1);
        CHECK(mono.g.pairs[i02].mult == 2);
    }
    SUBCASE("unused color gives an empty graph") {
        auto mono = monochromatic_subgraph(k3d, c, GREEN);
        CHECK(mono.g.n == 0);
        CHECK(mono.vertex_ids.empty());
    }
}

TEST_CASE("doubling doubles copies and degrees on every small connected graph") {
    for (int n = 1; n <= 7; ++n)
        for (const Multigraph& g : enumerate_connected(n)) {
            Multigraph g2 = doubled(g);
            CHECK(g2.copy_count() == 2 * (long long)g.pairs.size());
            for (int v = 0; v < g.n; ++v) CHECK(g2.degree(v) == 2 * g.degree(v));
        }
}

TEST_CASE("color degrees sum to the weighted degree and mono subgraphs partition") {
    Multigraph g = doubled(make_cycle(5));
    EdgeColoring c = EdgeColoring::blank(g);
    int col = 1;
    for (size_t i = 0; i < g.pairs.size(); ++i) {
        c.colors[i] = {col, col % 3 + 1};
        col = col % 3 + 1;
    }
    long long total = 0;
    for (int v = 0; v < g.n; ++v) {
        int sum = 0;
        for (int k = 1; k <= 3; ++k) sum += color_degree(g, c, v, k);
        CHECK(sum == g.degree(v));
    }
    for (int k = 1; k <= 3; ++k) total += monochromatic_subgraph(g, c, k).g.copy_count();
    CHECK(total == g.copy_count());
}
