// Isomorphism utilities for the small-graph enumerators: an invariant hash
// (iterated neighborhood refinement) for bucketing plus an exact backtracking
// test for dedup within a bucket. Sound for any graph size we enumerate.
#pragma once

#include <cstdint>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

// Invariant under isomorphism (multiplicity-aware); not a certificate.
uint64_t iso_hash(const Multigraph& g);

bool are_isomorphic(const Multigraph& a, const Multigraph& b);

// Keeps the first representative of every isomorphism class, preserving order.
std::vector<Multigraph> dedup_isomorphic(const std::vector<Multigraph>& graphs);

}  // namespace lir
