#pragma once

#include <span>
#include <string>
#include <vector>

#include "rankwl/common.hpp"
#include "rankwl/graph.hpp"

namespace rankwl {

// Rooted binary tree whose leaves carry graph vertices. Structural shape
// (every internal node has exactly two children, every non-root node has one
// parent) is enforced at construction; content (the leaf map being a
// bijection onto the vertex set) is what validate_decomposition checks.
class RankDecomposition {
public:
    struct Node {
        int left = -1, right = -1; // children, or -1 for leaves
        int leaf_vertex = -1;      // vertex at a leaf, -1 for internal nodes
    };

    RankDecomposition(std::vector<Node> nodes, int root);

    static RankDecomposition single(int vertex);
    // Left comb over the given leaf order: ((..((v0 v1) v2)..) v_last).
    static RankDecomposition caterpillar(std::span<const int> leaf_order);
    // Nested parentheses of leaf vertex ids, e.g. "((0 1) (2 3))".
    static RankDecomposition parse(const std::string& text);
    std::string serialise() const;

    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    bool is_leaf(int t) const { return nodes_[t].left < 0; }
    int leaf_count() const;

    // gamma(t): the vertices at the leaves below t, canonically ordered.
    VertexSet gamma(int t) const;

private:
    std::vector<Node> nodes_;
    int root_;
};

// R.1-R.3 with gamma induced from the leaf map: true iff the leaves biject
// onto the vertex set of g.
bool validate_decomposition(const Graph& g, const RankDecomposition& d);

// max over all nodes of the cut rank of gamma(t). Throws if invalid.
int decomposition_width(const Graph& g, const RankDecomposition& d);

struct RankWidthResult {
    int width = 0;
    RankDecomposition witness;
};

// Exact rank width by dynamic programming over vertex subsets (cost 3^n,
// guarded at n <= 16), with a witness decomposition reconstructed from the
// DP choices. Tie-breaking is deterministic, so witnesses are reproducible.
RankWidthResult rank_width_exact(const Graph& g, Exec exec = Exec::Parallel);

// k-expression AST over the operations: labelled vertex, cross-label edge
// insertion, relabelling, disjoint union.
class CliqueExpression {
public:
    enum class Kind { Vertex, AddEdges, Relabel, Union };
    struct Node {
        Kind kind;
        int i = 0, j = 0;          // labels for Vertex/AddEdges/Relabel
        int child = -1;            // AddEdges/Relabel operand
        int left = -1, right = -1; // Union operands
    };

    CliqueExpression(std::vector<Node> nodes, int root);

    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int label_count() const { return label_count_; } // max label used

private:
    std::vector<Node> nodes_;
    int root_;
    int label_count_;
};

// S-expression syntax: (v i) | (eta i j e) | (rho i j e) | (u e1 e2).
// Labels are positive; eta requires i != j.
CliqueExpression parse_expression(const std::string& text);

struct EvaluatedExpression {
    Graph graph;
    std::vector<int> labels; // vertex -> label in [1, label_count]
};

// Builds the graph bottom-up. Union numbers the left operand's vertices
// first; edge insertion is idempotent on existing edges.
EvaluatedExpression evaluate_expression(const CliqueExpression& e);

} // namespace rankwl
