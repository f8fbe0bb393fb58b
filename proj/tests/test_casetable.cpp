#include <doctest.h>

#include <set>

#include "lir/casetable.hpp"

using namespace lir;

TEST_CASE("fifteen boundary options, split six/three/six") {
    const auto& opts = boundary_options();
    REQUIRE(opts.size() == 15);
    int rr = 0, rb = 0, bb = 0;
    for (const auto& o : opts) {
        if (o.type == MColor::RR) ++rr;
        if (o.type == MColor::RB) ++rb;
        if (o.type == MColor::BB) ++bb;
    }
    CHECK(rr == 6);
    CHECK(rb == 3);
    CHECK(bb == 6);
    // the documented red-red option (red 5, blue 1) is present
    CHECK(CaseTable::option_index(MColor::RR, 5, 1) >= 0);
    // the pendant invariant excludes (3,3) on a red-blue boundary
    CHECK(CaseTable::option_index(MColor::RB, 3, 3) < 0);
}

TEST_CASE("superset check: options equal the realizable subcubic pairs") {
    // enumerate every pair consistent with a subcubic far endpoint and keep
    // those that survive the validity constraints; must match the lists
    auto stub = [](MColor t) {
        int r = t == MColor::RR ? 2 : t == MColor::RB ? 1 : 0;
        return std::pair<int, int>(r, 2 - r);
    };
    for (MColor t : {MColor::RR, MColor::RB, MColor::BB}) {
        std::set<std::pair<int, int>> expect;
        for (int deg : {4, 6})
            for (int r = 0; r <= deg; ++r) {
                int b = deg - r;
                auto [sr, sb] = stub(t);
                if (r < sr || b < sb) continue;
                if (sr > 0 && r == sr) continue;
                if (sb > 0 && b == sb) continue;
                if (t == MColor::RB && r == 3 && b == 3) continue;
                expect.insert({r, b});
            }
        std::set<std::pair<int, int>> got;
        for (const auto& o : boundary_options())
            if (o.type == t) got.insert({o.far_red, o.far_blue});
        CHECK(got == expect);
    }
}

TEST_CASE("all 3375 boundary triples extend") {
    CaseTable t = middle_part_casecheck();
    CHECK(t.extension.size() == 3375);
    const auto& opts = boundary_options();
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            for (int k = 0; k < 15; ++k)
                CHECK(extension_valid(opts[i], opts[j], opts[k], t.lookup(i, j, k)));
}

TEST_CASE("serialization is byte-stable and well-formed") {
    CaseTable a = middle_part_casecheck();
    CaseTable b = middle_part_casecheck();
    std::string sa = a.serialize(), sb = b.serialize();
    CHECK(sa == sb);
    size_t lines = 0;
    for (char ch : sa)
        if (ch == '\n') ++lines;
    CHECK(lines == 3375);
    CHECK(sa.find("RR51") != std::string::npos);
}
