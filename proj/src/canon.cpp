#include "rankwl/canon.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rankwl/wl.hpp"

namespace rankwl {

std::vector<VertexSet> orbit_partition(const Graph& g, int k, Exec exec) {
    TupleColouring tc = wl_stable_k(g, k + 1, exec);
    const int n = g.size();
    std::vector<std::vector<int>> by_colour(tc.num_colours);
    for (int v = 0; v < n; ++v) by_colour[tc.diag_id(v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& cls : by_colour)
        if (!cls.empty()) out.push_back(VertexSet(std::move(cls)));
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return out;
}

CanonicalForm canonise(const Graph& g, int k, Exec exec) {
    const int n = g.size();
    Graph cur = g;
    std::vector<int> order;
    std::vector<bool> chosen(n, false);
    for (int round = 0; round < n; ++round) {
        TupleColouring tc = wl_stable_k(cur, k + 1, exec);
        std::vector<int> diag(n);
        for (int v = 0; v < n; ++v) diag[v] = tc.diag_id(v);
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            if (pick < 0 || diag[v] < diag[pick]) pick = v;
        }
        chosen[pick] = true;
        order.push_back(pick);
        int picked = pick;
        cur = individualise(g.with_colours(std::move(diag)), std::span<const int>(&picked, 1));
    }

    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    CanonicalForm cf;
    cf.n = n;
    cf.colours.resize(n);
    for (int i = 0; i < n; ++i) cf.colours[i] = g.colour(order[i]);
    for (auto [u, v] : g.edge_list()) {
        int i = position[u], j = position[v];
        cf.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(cf.edges.begin(), cf.edges.end());
    return cf;
}

std::string canonical_string(const CanonicalForm& c) {
    std::ostringstream out;
    out << "n=" << c.n << ";colours=";
    for (int i = 0; i < c.n; ++i) {
        if (i) out << ',';
        out << c.colours[i];
    }
    out << ";edges=";
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (e) out << ',';
        out << '(' << c.edges[e].first << ',' << c.edges[e].second << ')';
    }
    return out.str();
}

Graph graph_of(const CanonicalForm& c) { return Graph(c.n, c.edges, c.colours); }

bool iso_test(const Graph& g, const Graph& h, int k, Exec exec) {
    const bool equal =
        canonical_string(canonise(g, k, exec)) == canonical_string(canonise(h, k, exec));
#ifndef NDEBUG
    if (g.size() == h.size() && wl_distinguishes(g, h, k + 1, exec)) assert(!equal);
#endif
    return equal;
}

} // namespace rankwl
