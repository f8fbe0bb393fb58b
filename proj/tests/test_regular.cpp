#include <doctest.h>

#include "lir/families.hpp"
#include "lir/oracle.hpp"
#include "lir/regular.hpp"
#include "lir/verifier.hpp"

using namespace lir;

TEST_CASE("triangle: red degrees match the shifted-weight sums") {
    Multigraph k3 = make_complete(3);
    Multigraph k3d = doubled(k3);
    EdgeColoring c = color_regular_double(k3);
    CHECK(verify(k3d, c).ok);
    // red degrees are a permutation of the shifted sums; with weights summing
    // per vertex they must be pairwise distinct across the triangle
    std::vector<int> red;
    for (int v = 0; v < 3; ++v) red.push_back(color_degree(k3d, c, v, RED));
    std::sort(red.begin(), red.end());
    CHECK(red[0] != red[1]);
    CHECK(red[1] != red[2]);
}

TEST_CASE("C4 gets a valid 2-coloring") {
    Multigraph c4 = make_cycle(4);
    EdgeColoring c = color_regular_double(c4);
    CHECK(verify(doubled(c4), c).ok);
    CHECK((int)c.colors_used().size() <= 2);
}

TEST_CASE("rejects irregular input and K2") {
    CHECK_THROWS_AS(color_regular_double(make_path(2)), error);
    CHECK_THROWS_AS(color_regular_double(make_path(1)), error);
}

TEST_CASE("every connected regular graph up to eight vertices") {
    for (int n = 3; n <= 8; ++n)
        for (const Multigraph& g : enumerate_connected(n)) {
            if (!g.is_regular() || g.degree(0) < 2) continue;
            Multigraph g2 = doubled(g);
            EdgeColoring c = color_regular_double(g);
            CHECK(verify(g2, c).ok);
            CHECK((int)c.colors_used().size() <= 2);
        }
}
