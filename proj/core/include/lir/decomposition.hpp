// Pertinent edge-decompositions of connected subcubic graphs: paths of
// length two plus at most one star-like element, with strong pertinence
// certified by search order (all-paths, then K13, then K13'').
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

enum class ElementKind { P3, K13, K13dd };

struct DecompElement {
    ElementKind kind = ElementKind::P3;
    std::vector<std::pair<int, int>> edges;  // u < v per edge
    int central = -1;                        // P3 middle or star hub
    std::vector<int> pendants;               // element-degree-1 vertices

    bool contains_vertex(int v) const;
    // number of element edges incident to v
    int edges_at(int v) const;
};

struct PertinentDecomposition {
    std::vector<DecompElement> elements;
    std::optional<int> special;  // index of the unique non-P3 element
    bool strongly_pertinent = false;
};

// Throws when no decomposition exists (e.g. K2, K3, P4 and the other
// uncolorable shapes never admit one).
PertinentDecomposition pertinent_decomposition(const Multigraph& g);

// Candidate strongly pertinent decompositions in deterministic order: every
// admissible star placement, each with path pairings from several tree
// roots. Not every candidate supports an element coloring, so callers that
// need one iterate until find_phi succeeds.
std::vector<PertinentDecomposition> pertinent_decompositions(const Multigraph& g, int limit = 64);

// Validity check used by tests and downstream assertions: element edges
// partition E(g) and every element matches its declared shape.
bool decomposition_valid(const Multigraph& g, const PertinentDecomposition& d);

}  // namespace lir
