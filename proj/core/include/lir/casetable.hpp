// Exhaustive middle-part case check for the adjacent-degree-2 reduction.
//
// Local configuration: x1-x0-v0(-y0-y1)-v1-v2-z where v0 has degree three,
// v1, v2 degree two, and x0, y0, v2 are degree-1 stubs of the reduced graph.
// The three boundary multiedges x0x1, y0y1, v2z each admit 15 combinations
// of coloring type and far-endpoint (red, blue) degrees; for each of the
// 15^3 = 3375 boundary triples the table stores a conflict-free coloring of
// the four removed multiedges x0v0, v0y0, v0v1, v1v2.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lir/common.hpp"

namespace lir {

// Multiedge coloring type over the {red, blue} palette.
enum class MColor : uint8_t { RR = 0, RB = 1, BB = 2 };

struct BoundaryOption {
    MColor type = MColor::RR;
    int far_red = 0, far_blue = 0;  // color degrees of the far endpoint
};

// The 15 admissible boundary options, in serialization order (RR block,
// then RB, then BB; pairs ascending). Derived from validity of the reduced
// coloring, the pendant invariant, and subcubic far-endpoint degrees.
const std::vector<BoundaryOption>& boundary_options();

struct CaseTable {
    // extension[i][j][k] = colorings of (x0v0, v0y0, v0v1, v1v2)
    std::vector<std::array<MColor, 4>> extension;  // flat, index i*225+j*15+k

    const std::array<MColor, 4>& lookup(int i, int j, int k) const;
    // Index of a boundary option; -1 when inadmissible.
    static int option_index(MColor type, int far_red, int far_blue);

    std::string serialize() const;  // deterministic, byte-stable
};

// Enumerates extensions for all 3375 triples; throws if any triple has none.
CaseTable middle_part_casecheck();

// True when the given extension is conflict-free against the boundary triple
// (shared by the table builder and its tests).
bool extension_valid(const BoundaryOption& bx, const BoundaryOption& by, const BoundaryOption& bz,
                     const std::array<MColor, 4>& ext);

}  // namespace lir
