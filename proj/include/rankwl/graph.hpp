#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankwl/bits.hpp"

namespace rankwl {

// Subset of [n] with canonical (sorted, duplicate-free) iteration order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);
    static VertexSet full(int n);
    static VertexSet from_mask(std::uint64_t mask);

    int size() const { return int(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int v) const;
    VertexSet complement(int n) const;
    std::uint64_t mask() const; // members must be < 64

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    int operator[](int i) const { return elems_[i]; }
    const std::vector<int>& members() const { return elems_; }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> elems_;
};

// Vertex-coloured simple undirected graph on vertices 0..n-1. Adjacency is
// stored as packed bit rows so that cut matrices are row slices. Immutable
// after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edges, std::vector<int> colours = {});

    int size() const { return n_; }
    bool adjacent(int v, int w) const {
        return (rows_[std::size_t(v) * words_ + (w >> 6)] >> (w & 63)) & 1u;
    }
    int colour(int v) const { return colours_[v]; }
    const std::vector<int>& colours() const { return colours_; }
    bool is_uncoloured() const;

    int degree(int v) const;
    std::vector<int> neighbours(int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const; // sorted, u < v

    // Adjacency row of v restricted to the columns listed in `cols`.
    BitVector row_restricted(int v, std::span<const int> cols) const;

    Graph with_colours(std::vector<int> colours) const;

    bool operator==(const Graph&) const = default;

    // Builders for common families.
    static Graph edgeless(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph disjoint_union(const Graph& a, const Graph& b);
    static Graph petersen();

private:
    int n_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> rows_;
    std::vector<int> colours_;
};

// Parsing and serialisation. parse_graph auto-detects the format: edge-list
// input starts with a digit, graph6 bytes never do.
Graph parse_graph(const std::string& text);
Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);
std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g); // uncoloured graphs only

Graph induced_subgraph(const Graph& g, const VertexSet& a);

// Image of g under the bijection pi (vertex v of g becomes pi[v]).
Graph apply_permutation(const Graph& g, std::span<const int> pi);

// Colour- and edge-preserving bijection from g to h, or nullopt. Deterministic:
// returns the first mapping in lexicographic backtracking order. Intended as a
// desk-scale oracle, pruned only by (colour, degree) classes.
std::optional<std::vector<int>> brute_force_isomorphic(const Graph& g, const Graph& h);

// Maximal connected vertex sets, each canonically ordered, listed by least element.
std::vector<VertexSet> connected_components(const Graph& g);

} // namespace rankwl
