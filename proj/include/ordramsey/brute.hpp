#pragma once

// Exact maxima by exhaustive subset search. Subsets are tried from the
// largest size down, and within a size in increasing bitmask order, so the
// witness is deterministic. Practical up to n around 16; n > 32 throws.

#include "ordramsey/instances.hpp"

namespace ordramsey {

struct BruteResult {
  int size = 0;
  VertexSet witness;
};

BruteResult brute_max_homogeneous(const PairColoring& f);
BruteResult brute_max_transitive(const Tournament& r);

}  // namespace ordramsey
