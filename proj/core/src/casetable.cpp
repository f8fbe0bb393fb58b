#include "lir/casetable.hpp"

#include <sstream>

namespace lir {

namespace {

int red_copies(MColor m) { return m == MColor::RR ? 2 : m == MColor::RB ? 1 : 0; }
int blue_copies(MColor m) { return 2 - red_copies(m); }

const char* mcolor_name(MColor m) {
    switch (m) {
        case MColor::RR: return "RR";
        case MColor::RB: return "RB";
        case MColor::BB: return "BB";
    }
    return "??";
}

std::vector<BoundaryOption> build_options() {
    // Admissible (far_red, far_blue) pairs per boundary type: the far
    // endpoint has degree 4 or 6, carries the boundary copies, avoids a tie
    // with the degree-2 stub, and (for red-blue) avoids the (3,3) pair the
    // pendant invariant forbids.
    std::vector<BoundaryOption> out;
    for (MColor type : {MColor::RR, MColor::RB, MColor::BB}) {
        int stub_r = red_copies(type), stub_b = blue_copies(type);
        std::vector<std::pair<int, int>> pairs;
        for (int deg : {4, 6})
            for (int r = 0; r <= deg; ++r) {
                int b = deg - r;
                if (r < stub_r || b < stub_b) continue;  // must contain the boundary copies
                if (stub_r > 0 && r == stub_r) continue; // tie with the stub over red
                if (stub_b > 0 && b == stub_b) continue; // tie with the stub over blue
                if (type == MColor::RB && r == 3 && b == 3) continue;  // pendant invariant
                pairs.push_back({r, b});
            }
        std::sort(pairs.begin(), pairs.end());
        for (auto [r, b] : pairs) out.push_back({type, r, b});
    }
    return out;
}

}  // namespace

const std::vector<BoundaryOption>& boundary_options() {
    static const std::vector<BoundaryOption> options = build_options();
    return options;
}

int CaseTable::option_index(MColor type, int far_red, int far_blue) {
    const auto& opts = boundary_options();
    for (int i = 0; i < (int)opts.size(); ++i)
        if (opts[i].type == type && opts[i].far_red == far_red && opts[i].far_blue == far_blue)
            return i;
    return -1;
}

const std::array<MColor, 4>& CaseTable::lookup(int i, int j, int k) const {
    return extension[(i * 15 + j) * 15 + k];
}

bool extension_valid(const BoundaryOption& bx, const BoundaryOption& by, const BoundaryOption& bz,
                     const std::array<MColor, 4>& ext) {
    // Local pattern: x1-x0-v0-y0-y1, v0-v1-v2-z; ext = colorings of
    // (x0v0, v0y0, v0v1, v1v2). Total (red, blue) degrees:
    auto r = [&](MColor m) { return red_copies(m); };
    auto b = [&](MColor m) { return blue_copies(m); };
    int x0r = r(bx.type) + r(ext[0]), x0b = b(bx.type) + b(ext[0]);
    int y0r = r(by.type) + r(ext[1]), y0b = b(by.type) + b(ext[1]);
    int v0r = r(ext[0]) + r(ext[1]) + r(ext[2]);
    int v0b = b(ext[0]) + b(ext[1]) + b(ext[2]);
    int v1r = r(ext[2]) + r(ext[3]), v1b = b(ext[2]) + b(ext[3]);
    int v2r = r(ext[3]) + r(bz.type), v2b = b(ext[3]) + b(bz.type);

    struct Deg {
        int red, blue;
    };
    auto conflict = [](Deg a, Deg c, MColor edge) {
        if (red_copies(edge) > 0 && a.red == c.red) return true;
        if (blue_copies(edge) > 0 && a.blue == c.blue) return true;
        return false;
    };
    Deg x1{bx.far_red, bx.far_blue}, x0{x0r, x0b}, v0{v0r, v0b}, y0{y0r, y0b};
    Deg y1{by.far_red, by.far_blue}, v1{v1r, v1b}, v2{v2r, v2b}, z{bz.far_red, bz.far_blue};
    if (conflict(x0, x1, bx.type)) return false;
    if (conflict(x0, v0, ext[0])) return false;
    if (conflict(v0, y0, ext[1])) return false;
    if (conflict(y0, y1, by.type)) return false;
    if (conflict(v0, v1, ext[2])) return false;
    if (conflict(v1, v2, ext[3])) return false;
    if (conflict(v2, z, bz.type)) return false;
    return true;
}

CaseTable middle_part_casecheck() {
    const auto& opts = boundary_options();
    if (opts.size() != 15) throw error("expected 15 boundary options");
    CaseTable table;
    table.extension.resize(15 * 15 * 15);
    const MColor all[3] = {MColor::RR, MColor::RB, MColor::BB};
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            for (int k = 0; k < 15; ++k) {
                bool found = false;
                std::array<MColor, 4> ext{};
                for (int a = 0; a < 3 && !found; ++a)
                    for (int b = 0; b < 3 && !found; ++b)
                        for (int c = 0; c < 3 && !found; ++c)
                            for (int d = 0; d < 3 && !found; ++d) {
                                ext = {all[a], all[b], all[c], all[d]};
                                found = extension_valid(opts[i], opts[j], opts[k], ext);
                            }
                if (!found)
                    throw error("boundary triple " + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + " has no extension");
                table.extension[(i * 15 + j) * 15 + k] = ext;
            }
    return table;
}

std::string CaseTable::serialize() const {
    // One line per triple: boundary codes, then the removed multiedges in
    // coloring-file body syntax over the fixed local numbering
    // x1=0 x0=1 v0=2 y0=3 y1=4 v1=5 v2=6 z=7.
    const auto& opts = boundary_options();
    static const int pairs[4][2] = {{1, 2}, {2, 3}, {2, 5}, {5, 6}};
    std::ostringstream out;
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            for (int k = 0; k < 15; ++k) {
                const auto& ext = lookup(i, j, k);
                auto code = [&](const BoundaryOption& o) {
                    return std::string(mcolor_name(o.type)) + std::to_string(o.far_red) +
                           std::to_string(o.far_blue);
                };
                out << code(opts[i]) << ' ' << code(opts[j]) << ' ' << code(opts[k]) << " :";
                for (int e = 0; e < 4; ++e) {
                    int c0 = red_copies(ext[e]) >= 1 ? RED : BLUE;
                    int c1 = red_copies(ext[e]) == 2 ? RED : BLUE;
                    out << ' ' << pairs[e][0] << ' ' << pairs[e][1] << " 0 " << c0;
                    out << ' ' << pairs[e][0] << ' ' << pairs[e][1] << " 1 " << c1;
                }
                out << '\n';
            }
    return out.str();
}

}  // namespace lir
