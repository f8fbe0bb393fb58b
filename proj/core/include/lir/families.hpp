// Test-family generators: named small families, pairing-model random regular
// graphs, and exhaustive duplicate-free enumeration of small graph classes.
#pragma once

#include <cstdint>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

Multigraph make_path(int length);          // length >= 1 edges
Multigraph make_cycle(int n);              // n >= 3
Multigraph make_complete(int n);
Multigraph make_star(int leaves);
Multigraph make_wheel(int rim);            // rim >= 3, hub + cycle
Multigraph make_bowtie();                  // the 10-vertex, 13-edge fixture

// Split graph with a clique of size n and d[i] private independent-set
// neighbors attached to clique vertex i.
Multigraph make_split(int n, const std::vector<int>& d);

// Subdivide every edge once.
Multigraph subdivide_all(const Multigraph& g);

// Pairing model with rejection of loops, repeats and disconnected outputs.
Multigraph random_regular(int n, int d, uint64_t seed);

Multigraph random_connected(int n, double edge_prob, uint64_t seed);

// Exhaustive, duplicate-free up to isomorphism. Desk scale: n is capped (10
// for general graphs, 12 with a degree bound) because dedup is brute-force.
std::vector<Multigraph> enumerate_connected(int n, int max_degree = -1);
std::vector<Multigraph> enumerate_connected_subcubic(int n);
std::vector<Multigraph> enumerate_connected_cubic(int n);

}  // namespace lir
