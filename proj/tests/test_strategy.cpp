#include <doctest.h>

#include "lir/families.hpp"
#include "lir/oracle.hpp"
#include "lir/strategy.hpp"
#include "lir/verifier.hpp"

using namespace lir;

namespace {

StrategyOutcome run(const Multigraph& g, const std::string& strategy = "auto") {
    StrategyOptions opts;
    opts.strategy = strategy;
    return color_double_auto(g, opts);
}

}  // namespace

TEST_CASE("auto picks the documented strategies") {
    auto c5 = run(make_cycle(5));
    CHECK(c5.report.error.empty());
    CHECK(c5.report.strategy == "regular");
    CHECK(c5.report.palette <= 2);
    CHECK(c5.report.verified);

    auto k4 = run(make_complete(4));
    CHECK(k4.report.strategy == "regular");
    CHECK(k4.report.palette == 2);

    auto bow = run(make_bowtie());
    CHECK(bow.report.error.empty());
    CHECK(bow.report.strategy == "oracle");
    CHECK(bow.report.palette <= 2);
    CHECK(bow.report.verified);
}

TEST_CASE("K2 is a per-graph error") {
    auto r = run(make_path(1));
    CHECK(!r.report.error.empty());
    CHECK(!r.coloring.has_value());
}

TEST_CASE("named strategies work on their own families") {
    auto split = run(make_split(5, {2, 0, 0, 0, 0}), "split");
    CHECK(split.report.error.empty());
    CHECK(split.report.verified);

    auto bip = run(make_cycle(6), "bipartite");
    CHECK(bip.report.error.empty());
    CHECK(bip.report.palette <= 2);

    auto sub = run(make_path(6), "subcubic-independent");
    CHECK(sub.report.error.empty());
    CHECK(sub.report.palette <= 2);

    auto planar = run(make_wheel(5), "planar4");
    CHECK(planar.report.error.empty());
    CHECK(planar.report.palette <= 4);
}

TEST_CASE("long-paths strategy on an expanded K4") {
    // replace one K4 edge with a 5-path by hand
    std::vector<EdgeInput> e = {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1},
                                {0, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {7, 1, 1}};
    Multigraph g = Multigraph::from_edges(8, e);
    auto r = run(g, "long-paths");
    CHECK(r.report.error.empty());
    CHECK(r.report.palette <= 2);
    CHECK(r.report.verified);

    // not applicable to a plain cycle
    auto bad = run(make_cycle(6), "long-paths");
    CHECK(!bad.report.error.empty());
}

TEST_CASE("outputs re-verify for a mixed batch") {
    for (const Multigraph& g :
         {make_cycle(7), make_complete(5), make_wheel(6), make_star(4), make_path(5)}) {
        auto r = run(g);
        CHECK(r.report.error.empty());
        REQUIRE(r.coloring.has_value());
        CHECK(verify(doubled(g), *r.coloring).ok);
    }
}

TEST_CASE("constructor palettes stay consistent with the exact index") {
    for (int n = 3; n <= 6; ++n)
        for (const Multigraph& g : enumerate_connected(n)) {
            auto r = run(g);
            REQUIRE(r.report.error.empty());
            REQUIRE(r.coloring.has_value());
            Multigraph g2 = doubled(g);
            CHECK(verify(g2, *r.coloring).ok);
            auto exact = exact_lir(g2, 2);
            REQUIRE(exact.colorable);
            CHECK(r.report.palette >= exact.value);
        }
}
