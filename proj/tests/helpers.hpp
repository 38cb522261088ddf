#pragma once

#include <utility>
#include <vector>

#include "rankwl/graph.hpp"

namespace testutil {

inline rankwl::Graph make_graph(int n, std::vector<std::pair<int, int>> edges,
                                std::vector<int> colours = {}) {
    return rankwl::Graph(n, edges, std::move(colours));
}

inline rankwl::Graph two_triangles() {
    return rankwl::Graph::disjoint_union(rankwl::Graph::complete(3), rankwl::Graph::complete(3));
}

// Partition of [n] induced by a colouring, as sorted classes listed by least
// element; for comparing partitions while ignoring colour ids.
inline std::vector<std::vector<int>> classes_of(const std::vector<int>& colour) {
    std::vector<std::vector<int>> by_id;
    for (int v = 0; v < int(colour.size()); ++v) {
        if (colour[v] >= int(by_id.size())) by_id.resize(colour[v] + 1);
        by_id[colour[v]].push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& cls : by_id)
        if (!cls.empty()) out.push_back(cls);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testutil
