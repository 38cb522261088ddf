#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rankwl/common.hpp"
#include "rankwl/graph.hpp"

namespace rankwl {

// Stable or intermediate colouring of the k-tuples of a graph. Colour ids are
// canonical: 0..num_colours-1 in lexicographic order of the defining
// signatures, so ids depend only on the isomorphism class of the input.
struct TupleColouring {
    int k = 0;
    int n = 0;
    std::vector<int> colour; // indexed by tuple, row-major (first entry most significant)
    int num_colours = 0;
    int rounds = 0;

    long long index_of(std::span<const int> tuple) const;
    int id_of(std::span<const int> tuple) const { return colour[index_of(tuple)]; }
    int diag_id(int v) const;
};

// Vertex colouring with canonical contiguous ids.
struct VertexColouring {
    std::vector<int> colour;
    int num_colours = 0;

    bool operator==(const VertexColouring&) const = default;
};

// Initial k-WL colouring (k >= 2): tuples are coloured by the isomorphism
// type of their underlying ordered subgraph (vertex colours, equality
// pattern, adjacency pattern).
TupleColouring initial_colouring_k(const Graph& g, int k);

// Stable k-WL colouring. k = 1 is colour refinement with neighbour-only
// multisets. The parallel kernel is bit-identical to the serial one.
TupleColouring wl_stable_k(const Graph& g, int k, Exec exec = Exec::Parallel);

// Simple map-based reference implementation with the same output contract.
// Kept independent of the kernel for differential testing.
TupleColouring wl_stable_k_reference(const Graph& g, int k);

// New graph whose colouring individualises the tuple entries: the latest
// occurrence of a vertex at (1-based) position i receives colour i; every
// other vertex keeps its colour shifted above the reserved range.
Graph individualise(const Graph& g, std::span<const int> tuple);

// True iff some stable colour class has different cardinalities among
// V(G)^k and V(H)^k. The two refinements run in lockstep sharing one
// signature dictionary per round. Graphs of different order are
// distinguished immediately.
bool wl_distinguishes(const Graph& g, const Graph& h, int k, Exec exec = Exec::Parallel);

// (colour id, count) pairs sorted by id; counts sum to n^k.
std::vector<std::pair<int, long long>> colour_histogram(const TupleColouring& c);

// View of a 1-dimensional tuple colouring as a vertex colouring.
VertexColouring vertex_colouring(const TupleColouring& c);

// Stable colour refinement of g as a vertex colouring.
VertexColouring stable_vertex_colouring(const Graph& g, Exec exec = Exec::Parallel);

} // namespace rankwl
