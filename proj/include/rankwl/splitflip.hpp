#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rankwl/bits.hpp"
#include "rankwl/graph.hpp"
#include "rankwl/wl.hpp"

namespace rankwl {

// Ordered split pair for a set X: tuple a spans the cut space of X, tuple b
// the cut space of the complement; both have length cut_rank(X). The pair
// ((),()) is the designated split pair for X = V(G) and X = {}.
struct OrderedSplitPair {
    std::vector<int> a;
    std::vector<int> b;
    VertexSet for_set;
};

// Cut vector of v against the complement of X: bit per member of X-bar in
// canonical order, set iff the pair is an edge. Requires v in X.
BitVector x_vector(const Graph& g, const VertexSet& x, int v);

// Deterministic split pair: both tuples are first-fit greedy bases over the
// canonical vertex order.
OrderedSplitPair find_split_pair(const Graph& g, const VertexSet& x);

// Throws std::invalid_argument if sp is not a valid ordered split pair for
// its set on g.
void check_split_pair(const Graph& g, const OrderedSplitPair& sp);

// Split pairs for the two halves of X = X1 + X2 such that additionally
//   a cap X_i  is a prefix-preserved subset of a_i,
//   b_{3-i} cap X_i  is contained in a_i, and
//   b_i outside X is contained in b.
// Construction: extend a cap X_i to a basis over X_i; choose b_i greedily
// inside b union a_{3-i}.
std::pair<OrderedSplitPair, OrderedSplitPair> nice_split_pairs(
    const Graph& g, const VertexSet& x, const VertexSet& x1, const VertexSet& x2,
    const OrderedSplitPair& sp);

// Symmetric 0/1 function on pairs of colour ids 0..num_colours-1.
class FlipFunction {
public:
    FlipFunction() = default;
    explicit FlipFunction(int num_colours)
        : num_colours_(num_colours), bits_(std::size_t(num_colours) * num_colours, 0) {}

    int num_colours() const { return num_colours_; }
    bool get(int c1, int c2) const { return bits_[std::size_t(c1) * num_colours_ + c2]; }
    void set(int c1, int c2, bool v) {
        bits_[std::size_t(c1) * num_colours_ + c2] = v;
        bits_[std::size_t(c2) * num_colours_ + c1] = v;
    }

private:
    int num_colours_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Flipped graph: adjacency is complemented exactly between colour classes
// with f = 1. Throws if some occurring colour pair is outside f's domain.
Graph flip_graph(const Graph& g, const VertexColouring& chi, const FlipFunction& f);

struct FlipResult {
    FlipFunction f;
    VertexColouring colouring; // stable colouring f was computed against
};

// The flip function for X from the split pair: individualise (a,b), refine to
// the stable vertex colouring, and flip every colour pair joined by an edge
// crossing the cut. Every component of the flipped graph then lies within X
// or its complement.
FlipResult find_flip_function(const Graph& g, const VertexSet& x, const OrderedSplitPair& sp);

// Components of the flipped graph.
std::vector<VertexSet> components_flip(const Graph& g, const VertexColouring& chi,
                                       const FlipFunction& f);

// All vertices whose neighbourhood inside set(a) union set(b) matches v's.
VertexSet equiv_class(const Graph& g, std::span<const int> a, std::span<const int> b, int v);

// Flip extension (a, b, f): f maps ordered pairs of neighbourhood patterns
// (subsets of the anchor vertices, as bitmasks over the deduplicated anchor
// list) to a threshold in [1, n], or 0 meaning undefined. For distinct
// patterns at most one order is defined.
struct FlipExtension {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> anchors; // concat(a, b), duplicates collapsed by first occurrence
    std::vector<int> f;       // (1 << anchors.size())^2 entries, 0 = undefined

    int value(int m, int n) const { return f[std::size_t(m) << anchors.size() | unsigned(n)]; }
    void set_value(int m, int n, int d) { f[std::size_t(m) << anchors.size() | unsigned(n)] = d; }
    int pattern_of(const Graph& g, int v) const;
};

FlipExtension make_flip_extension(const Graph& g, std::vector<int> a, std::vector<int> b);

// Graph rewritten by the flip extension: for each pair, the defined order of
// f supplies a threshold d; the pair is an edge of the result iff it was an
// edge and the counting vertex sees < d members of the other's pattern class,
// or it was a non-edge and the count is >= d. Pairs with f undefined in both
// orders are non-edges.
Graph flip_extension_graph(const Graph& g, const FlipExtension& s);

// Builds the flip extension for X from the split pair so that every
// component of the rewritten graph lies within X or its complement. Per
// pattern pair the threshold is n when no edges cross between the classes'
// opposite sides, 1 when all such pairs are edges, and otherwise the minimal
// cross-degree that separates the two sides.
FlipExtension find_flip_extension(const Graph& g, const VertexSet& x, const OrderedSplitPair& sp);

// Component of v in the rewritten graph.
VertexSet comp_flip_extension(const Graph& g, const FlipExtension& s, int v);

} // namespace rankwl
