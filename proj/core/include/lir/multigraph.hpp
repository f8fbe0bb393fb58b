// Multigraph with edge multiplicities in {1,2}, edge colorings over parallel
// copies, and the degree/monochromatic-subgraph queries everything else uses.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lir/common.hpp"

namespace lir {

struct EdgeInput {
    int u = 0, v = 0;
    int mult = 1;
};

// Vertices are dense indices 0..n-1. Each unordered pair appears once with
// its multiplicity; pairs are kept sorted by (u,v) with u < v so copy indices
// are stable across I/O round trips.
struct Multigraph {
    struct Pair {
        int u = 0, v = 0;  // u < v
        int mult = 1;      // 1 or 2
    };

    int n = 0;
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> inc;  // vertex -> indices into pairs
    std::vector<std::string> labels;    // optional external ids, may be empty

    static Multigraph from_edges(int n, const std::vector<EdgeInput>& edges);

    int pair_index(int u, int v) const;  // -1 when absent
    int multiplicity(int u, int v) const;
    bool adjacent(int u, int v) const { return pair_index(u, v) >= 0; }

    int degree(int v) const;         // multiplicity-weighted
    int simple_degree(int v) const;  // number of distinct neighbors
    int max_degree() const;

    long long copy_count() const;  // total parallel edge copies
    bool is_simple() const;
    bool is_two_multigraph() const;
    bool is_connected() const;
    bool is_regular() const;  // all multiplicity-weighted degrees equal

    std::vector<int> neighbors(int v) const;
    std::vector<int> component_of(int start) const;           // sorted vertices
    std::vector<std::vector<int>> components() const;         // sorted lists
    Multigraph induced(const std::vector<int>& verts) const;  // relabels 0..k-1

    // 2-coloring of the vertex set when bipartite.
    std::optional<std::vector<int>> bipartition() const;
};

// Addresses one parallel copy of an unordered pair.
struct EdgeCopyRef {
    int u = 0, v = 0;
    int copy = 0;
};

// Color per parallel copy, indexed in parallel with Multigraph::pairs.
// Color 0 marks an uncolored copy; partial colorings are first-class because
// the staged constructions color a 2-multigraph in two steps.
struct EdgeColoring {
    std::vector<std::array<int, 2>> colors;

    static EdgeColoring blank(const Multigraph& g);

    int get(const Multigraph& g, int u, int v, int copy) const;
    void set(const Multigraph& g, int u, int v, int copy, int color);
    // Assigns both copies of a multiplicity-2 pair.
    void set_multiedge(const Multigraph& g, int u, int v, int c0, int c1);

    bool is_total(const Multigraph& g) const;
    int palette_size() const;                // max color used
    std::vector<int> colors_used() const;    // sorted distinct colors
};

// ^2G: doubles every edge of a simple graph. Rejects non-simple input.
Multigraph doubled(const Multigraph& g);

// Underlying simple graph (all multiplicities dropped to 1).
Multigraph underlying_simple(const Multigraph& g);

// Lifts a coloring of simple g to doubled(g) by coloring both copies alike.
EdgeColoring doubled_coloring(const Multigraph& g, const EdgeColoring& c);

// Number of incident copies of the given color at v. Requires every copy at v
// to be colored; throws otherwise ("partial coloring").
int color_degree(const Multigraph& g, const EdgeColoring& c, int v, int color);

// Same count, but uncolored copies are silently skipped.
int color_degree_partial(const Multigraph& g, const EdgeColoring& c, int v, int color);

// Per-vertex map color -> degree for a total coloring.
struct ColorDegreeProfile {
    std::vector<std::vector<int>> degree;  // [v][color], index 0 unused
    int palette = 0;
};
ColorDegreeProfile color_degree_profile(const Multigraph& g, const EdgeColoring& c);

// Subgraph induced on the copies of one color. Isolated vertices are dropped;
// vertex_ids maps the new indices back to g's.
struct MonochromaticSubgraph {
    Multigraph g;
    std::vector<int> vertex_ids;
};
MonochromaticSubgraph monochromatic_subgraph(const Multigraph& g, const EdgeColoring& c, int color);

}  // namespace lir
