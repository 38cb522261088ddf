#include <doctest.h>

#include "helpers.hpp"
#include "rankwl/canon.hpp"
#include "rankwl/decomposition.hpp"
#include "rankwl/verify.hpp"
#include "rankwl/wl.hpp"

using namespace rankwl;

TEST_SUITE_BEGIN("canon");

TEST_CASE("orbit partitions") {
    auto c5 = orbit_partition(Graph::cycle(5), 1);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0] == VertexSet::full(5));

    auto p3 = orbit_partition(Graph::path(3), 1);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == VertexSet({0, 2}));
    CHECK(p3[1] == VertexSet({1}));

    CounterRng rng(71, 0);
    for (int t = 0; t < 15; ++t) {
        int n = 1 + rng.below(5);
        Graph g = random_graph(n, rng);
        CHECK(orbit_partition(g, 2) == automorphism_orbits(g));
    }
}

TEST_CASE("canonical forms and strings") {
    CanonicalForm single = canonise(Graph::edgeless(1), 2);
    CHECK(single.n == 1);
    CHECK(single.edges.empty());
    CHECK(canonical_string(single) == "n=1;colours=0;edges=");

    CHECK(canonical_string(canonise(Graph::complete(2), 2)) == "n=2;colours=0,0;edges=(0,1)");

    Graph p3a = Graph::path(3);
    Graph p3b = parse_graph("3 2\n0 2\n1 2\n");
    CHECK(canonise(p3a, 2) == canonise(p3b, 2));
    CHECK(canonical_string(canonise(p3a, 2)) == canonical_string(canonise(p3b, 2)));
}

TEST_CASE("canonised graphs stay isomorphic and stable under relabelling") {
    CounterRng rng(72, 0);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + rng.below(6);
        Graph g = random_graph(n, rng);
        if (rng.coin()) {
            std::vector<int> colours(n);
            for (int v = 0; v < n; ++v) colours[v] = rng.below(2);
            g = g.with_colours(colours);
        }
        CanonicalForm cf = canonise(g, 2);
        auto iso = brute_force_isomorphic(graph_of(cf), g);
        REQUIRE(iso.has_value());
        Graph h = apply_permutation(g, random_permutation(n, rng));
        CHECK(canonical_string(canonise(h, 2)) == canonical_string(cf));
    }
}

TEST_CASE("canonical colours follow the chosen vertex order") {
    Graph g = testutil::make_graph(3, {{0, 1}}, {5, 5, 9});
    CanonicalForm cf = canonise(g, 2);
    // one vertex of colour 9, two of colour 5; the emitted colours are a
    // permutation of the input colours
    std::vector<int> sorted = cf.colours;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{5, 5, 9});
    CHECK(graph_of(cf).edge_count() == 1);
}

TEST_CASE("round-by-round induction invariant under relabelling") {
    // The two runs must stay WL-equivalent after each individualisation and
    // pick vertices with equal diagonal colours.
    CounterRng rng(73, 0);
    const int k = 2;
    for (int t = 0; t < 8; ++t) {
        int n = 2 + rng.below(5);
        Graph g = random_graph(n, rng);
        auto pi = random_permutation(n, rng);
        Graph h = apply_permutation(g, pi);
        Graph cg = g, ch = h;
        std::vector<bool> used_g(n, false), used_h(n, false);
        for (int round = 0; round < n; ++round) {
            REQUIRE_FALSE(wl_distinguishes(cg, ch, k + 1));
            TupleColouring tg = wl_stable_k(cg, k + 1);
            TupleColouring th = wl_stable_k(ch, k + 1);
            auto pick = [&](const TupleColouring& tc, const std::vector<bool>& used) {
                int best = -1;
                for (int v = 0; v < n; ++v)
                    if (!used[v] && (best < 0 || tc.diag_id(v) < tc.diag_id(best))) best = v;
                return best;
            };
            int vg = pick(tg, used_g), vh = pick(th, used_h);
            REQUIRE(tg.diag_id(vg) == th.diag_id(vh));
            used_g[vg] = true;
            used_h[vh] = true;
            std::vector<int> dg(n), dh(n);
            for (int v = 0; v < n; ++v) {
                dg[v] = tg.diag_id(v);
                dh[v] = th.diag_id(v);
            }
            cg = individualise(g.with_colours(dg), std::span<const int>(&vg, 1));
            ch = individualise(h.with_colours(dh), std::span<const int>(&vh, 1));
        }
    }
}

TEST_CASE("high-dimension smoke run") {
    // the dimension-7 engine path, desk scale only
    CounterRng rng(75, 0);
    Graph g = Graph::path(4);
    Graph h = apply_permutation(g, random_permutation(4, rng));
    CHECK(canonical_string(canonise(g, 6)) == canonical_string(canonise(h, 6)));
    CHECK(brute_force_isomorphic(graph_of(canonise(g, 6)), g).has_value());
}

TEST_CASE("isomorphism test via canonisation") {
    Graph c6 = Graph::cycle(6);
    CHECK_FALSE(iso_test(c6, testutil::two_triangles(), 1));
    CounterRng rng(74, 0);
    Graph pete = Graph::petersen();
    CHECK(iso_test(pete, apply_permutation(pete, random_permutation(10, rng)), 2));

    // exhaustive agreement with the oracle on low-rank-width classes
    for (int n = 1; n <= 4; ++n) {
        auto reps = all_graphs_up_to_iso(n);
        std::vector<Graph> low;
        for (const Graph& g : reps)
            if (rank_width_exact(g).width <= 1) low.push_back(g);
        for (std::size_t i = 0; i < low.size(); ++i)
            for (std::size_t j = i; j < low.size(); ++j)
                REQUIRE(iso_test(low[i], low[j], 2) ==
                        brute_force_isomorphic(low[i], low[j]).has_value());
    }
}

TEST_SUITE_END();
