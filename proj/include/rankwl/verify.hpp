#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankwl/graph.hpp"

namespace rankwl {

// Counter-based random stream: draw i of stream s under seed q is a pure
// function of (q, s, i), so suites are order-independent and reproducible.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next();
    int below(int n); // uniform in [0, n)
    bool coin() { return next() & 1; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

Graph random_graph(int n, CounterRng& rng);
std::vector<int> random_permutation(int n, CounterRng& rng);
VertexSet random_subset(int n, CounterRng& rng);

// Lexicographically least adjacency bit string over all relabellings.
// Independent of the refinement machinery; usable as an oracle for n <= 8.
std::uint64_t min_perm_canonical_mask(const Graph& g);

// One representative per isomorphism class of uncoloured graphs on n
// vertices (the representative with the least adjacency bit string),
// enumerated by brute force. n <= 6.
std::vector<Graph> all_graphs_up_to_iso(int n);

// True automorphism orbits from enumerating all n! permutations (n <= 8),
// listed by least element.
std::vector<VertexSet> automorphism_orbits(const Graph& g);

// Labelled tree on n >= 2 vertices decoded from a Pruefer sequence of
// length n - 2 (empty for n = 2).
Graph prufer_tree(int n, std::span<const int> seq);

// Embedded k-expression fixtures used by the width suite and tests.
struct ExpressionFixture {
    std::string name;
    std::string text;
};
const std::vector<ExpressionFixture>& expression_fixtures();

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Acceptance suites; names in execution order.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

} // namespace rankwl
