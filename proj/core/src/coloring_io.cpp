#include "lir/coloring_io.hpp"

#include <sstream>

namespace lir {

std::string emit_coloring(const Multigraph& g, const EdgeColoring& c) {
    if (!c.is_total(g)) throw error("emit_coloring requires a total coloring");
    std::ostringstream out;
    out << "lir-coloring v1 " << g.n << ' ' << g.pairs.size() << ' ' << c.palette_size() << '\n';
    // pairs are already sorted by (u,v); copies ascend within each pair
    for (size_t i = 0; i < g.pairs.size(); ++i)
        for (int k = 0; k < g.pairs[i].mult; ++k)
            out << g.pairs[i].u << ' ' << g.pairs[i].v << ' ' << k << ' ' << c.colors[i][k] << '\n';
    return out.str();
}

EdgeColoring parse_coloring(const std::string& text, const Multigraph& g) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw parse_error("coloring line " + std::to_string(lineno) + ": " + what);
    };

    if (!std::getline(in, line)) throw parse_error("coloring: empty input");
    lineno = 1;
    std::istringstream hdr(line);
    std::string magic, version;
    long long n = -1, pairs = -1, palette = -1;
    hdr >> magic >> version >> n >> pairs >> palette;
    if (magic != "lir-coloring" || version != "v1" || hdr.fail()) fail("bad header");
    if (n != g.n) fail("vertex count does not match graph");
    if (pairs != (long long)g.pairs.size()) fail("pair count does not match graph");

    EdgeColoring c = EdgeColoring::blank(g);
    std::vector<std::array<bool, 2>> seen(g.pairs.size(), {false, false});
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v, copy, color;
        ls >> u >> v >> copy >> color;
        std::string rest;
        if (ls.fail() || (ls >> rest)) fail("expected 'u v copy color'");
        if (u >= v) fail("pairs must be written with u < v");
        int i = g.pair_index(u, v);
        if (i < 0) fail("pair not present in graph");
        if (copy < 0 || copy >= g.pairs[i].mult) fail("copy index exceeds multiplicity");
        if (color < 1) fail("colors must be >= 1");
        if (seen[i][copy]) fail("duplicate copy");
        seen[i][copy] = true;
        c.colors[i][copy] = color;
    }
    if (!c.is_total(g)) throw parse_error("coloring: missing copies, coloring not total");
    if (c.palette_size() != palette) throw parse_error("coloring: header palette does not match body");
    return c;
}

}  // namespace lir
