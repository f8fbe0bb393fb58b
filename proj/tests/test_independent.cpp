#include <doctest.h>

#include "lir/families.hpp"
#include "lir/independent.hpp"
#include "lir/verifier.hpp"

using namespace lir;

namespace {

bool deg3_independent(const Multigraph& g) {
    for (const auto& p : g.pairs)
        if (g.degree(p.u) == 3 && g.degree(p.v) == 3) return false;
    return true;
}

void check_colored(const Multigraph& g) {
    Multigraph g2 = doubled(g);
    EdgeColoring c = color_subcubic_independent(g);
    CHECK(verify(g2, c).ok);
    CHECK(verify_pendant_invariant(g2, c));
    CHECK((int)c.colors_used().size() <= 2);
}

}  // namespace

TEST_CASE("documented base graphs") {
    // the claw with one edge subdivided twice and the others once
    Multigraph spider = Multigraph::from_edges(
        8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 4, 1}, {4, 5, 1}, {0, 6, 1}, {6, 7, 1}});
    check_colored(spider);

    // triangle with a pendant edge
    Multigraph tri = Multigraph::from_edges(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}});
    check_colored(tri);
}

TEST_CASE("paths, cycles, stars") {
    check_colored(make_path(2));
    check_colored(make_path(7));
    check_colored(make_cycle(5));
    check_colored(make_cycle(8));
    check_colored(make_star(3));
}

TEST_CASE("preconditions rejected") {
    CHECK_THROWS_AS(color_subcubic_independent(make_path(1)), error);
    CHECK_THROWS_AS(color_subcubic_independent(make_complete(4)), error);  // adjacent degree-3
}

TEST_CASE("awkward shapes: spiders, tadpoles, pendant squares") {
    // spider with legs (1,3,3): the pendant-path stub degenerates
    Multigraph s133 = Multigraph::from_edges(
        8, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}, {6, 7, 1}});
    check_colored(s133);

    // triangle with a length-2 tail
    Multigraph tad2 = Multigraph::from_edges(
        5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    check_colored(tad2);

    // two 4-cycles joined through their degree-3 vertices by a 2-path
    Multigraph squares = Multigraph::from_edges(9, {{0, 1, 1},
                                                    {1, 2, 1},
                                                    {2, 3, 1},
                                                    {3, 0, 1},
                                                    {0, 4, 1},
                                                    {4, 5, 1},
                                                    {5, 6, 1},
                                                    {6, 7, 1},
                                                    {7, 8, 1},
                                                    {8, 5, 1}});
    check_colored(squares);
}

TEST_CASE("subdivided cubic base graphs") {
    for (const auto& h : enumerate_connected_cubic(6)) check_colored(subdivide_all(h));
}

TEST_CASE("whole family up to nine vertices") {
    int covered = 0;
    for (int n = 3; n <= 9; ++n)
        for (const Multigraph& g : enumerate_connected_subcubic(n)) {
            if (!deg3_independent(g)) continue;
            check_colored(g);
            ++covered;
        }
    CHECK(covered >= 111);  // the family size at n <= 9
}
