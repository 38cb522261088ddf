#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rankwl/common.hpp"
#include "rankwl/graph.hpp"

namespace rankwl {

// Integer-labelled copy of a graph in canonical order: vertex i is the i-th
// individualised vertex, colours carry the original vertex colours over.
struct CanonicalForm {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // i < j, sorted
    std::vector<int> colours;               // position -> original colour

    bool operator==(const CanonicalForm&) const = default;
};

// Vertices grouped by their stable (k+1)-WL diagonal colour; for classes
// that k-WL identifies these are exactly the automorphism orbits. Sets are
// listed by least element.
std::vector<VertexSet> orbit_partition(const Graph& g, int k, Exec exec = Exec::Parallel);

// Individualisation-refinement canonisation: n rounds, each running the
// stable (k+1)-WL colouring of the previous round's graph, individualising
// the unchosen vertex of minimal diagonal colour (ties to the lowest vertex
// index). The emitted form lists vertices in the chosen order.
CanonicalForm canonise(const Graph& g, int k, Exec exec = Exec::Parallel);

// Bit-exact serialisation "n=<n>;colours=<c_0,...>;edges=<(i,j),...>" with
// edges sorted lexicographically. This is the stable output contract.
std::string canonical_string(const CanonicalForm& c);

Graph graph_of(const CanonicalForm& c);

// True iff the canonical strings coincide. In debug builds, cross-checks
// that (k+1)-WL distinguishing the graphs implies differing strings.
bool iso_test(const Graph& g, const Graph& h, int k, Exec exec = Exec::Parallel);

} // namespace rankwl
