#pragma once

#include "rankwl/bits.hpp"
#include "rankwl/graph.hpp"

namespace rankwl {

// M(X, X-bar): rows indexed by X in canonical order, columns by the
// complement in canonical order; entry 1 iff the pair is an edge.
BitMatrix cut_matrix(const Graph& g, const VertexSet& x);

// GF(2) rank of the cut matrix; 0 for the empty or full set.
int cut_rank(const Graph& g, const VertexSet& x);

} // namespace rankwl
