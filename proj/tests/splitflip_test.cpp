#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "rankwl/cutrank.hpp"
#include "rankwl/splitflip.hpp"
#include "rankwl/verify.hpp"
#include "rankwl/wl.hpp"

using namespace rankwl;
using testutil::classes_of;

namespace {

bool within_one_side(const VertexSet& comp, const VertexSet& x) {
    bool in = true, out = true;
    for (int v : comp) (x.contains(v) ? out : in) = false;
    return in || out;
}

bool members_subset(std::span<const int> tuple, const VertexSet& s, std::span<const int> big) {
    for (int v : tuple)
        if (s.contains(v) && std::find(big.begin(), big.end(), v) == big.end()) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("splitflip");

TEST_CASE("cut vectors") {
    BitVector v = x_vector(Graph::complete(3), VertexSet({0, 1}), 0);
    REQUIRE(v.len() == 1);
    CHECK(v.get(0));

    Graph iso = Graph::edgeless(4);
    CHECK_FALSE(x_vector(iso, VertexSet({0, 1}), 1).any());

    BitVector c4 = x_vector(Graph::cycle(4), VertexSet({0, 1}), 0);
    CHECK_FALSE(c4.get(0)); // column 2
    CHECK(c4.get(1));       // column 3

    CHECK_THROWS(x_vector(Graph::complete(3), VertexSet({0, 1}), 2));
}

TEST_CASE("split pairs") {
    Graph k4 = Graph::complete(4);
    OrderedSplitPair whole = find_split_pair(k4, VertexSet::full(4));
    CHECK(whole.a.empty());
    CHECK(whole.b.empty());
    CHECK_NOTHROW(check_split_pair(k4, whole));

    OrderedSplitPair empty = find_split_pair(k4, VertexSet());
    CHECK(empty.a.empty());
    CHECK(empty.b.empty());

    OrderedSplitPair sp = find_split_pair(k4, VertexSet({0, 1}));
    CHECK(sp.a.size() == 1);
    CHECK(sp.b.size() == 1);

    OrderedSplitPair c5 = find_split_pair(Graph::cycle(5), VertexSet({0, 1}));
    CHECK(c5.a.size() == 2);
    CHECK(c5.b.size() == 2);

    CounterRng rng(41, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + rng.below(9);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair p = find_split_pair(g, x);
        CHECK(int(p.a.size()) == cut_rank(g, x));
        CHECK_NOTHROW(check_split_pair(g, p));
    }

    OrderedSplitPair bogus{{0}, {2}, VertexSet({0, 1})};
    CHECK_THROWS(check_split_pair(Graph::edgeless(4), bogus));
}

TEST_CASE("nice split pairs") {
    // halves of an edgeless graph carry empty tuples throughout
    Graph e4 = Graph::edgeless(4);
    VertexSet v4 = VertexSet::full(4), h1({0, 1}), h2({2, 3});
    auto [e1, e2] = nice_split_pairs(e4, v4, h1, h2, find_split_pair(e4, v4));
    CHECK(e1.a.empty());
    CHECK(e1.b.empty());
    CHECK(e2.a.empty());
    CHECK(e2.b.empty());

    Graph k4 = Graph::complete(4);
    auto [p1, p2] = nice_split_pairs(k4, v4, h1, h2, find_split_pair(k4, v4));
    CHECK(p1.a.size() == 1);
    CHECK(p1.b.size() == 1);
    CHECK(p2.a.size() == 1);
    CHECK(p2.b.size() == 1);
    CHECK_NOTHROW(check_split_pair(k4, p1));
    CHECK_NOTHROW(check_split_pair(k4, p2));

    CHECK_THROWS(nice_split_pairs(k4, v4, h1, VertexSet({1, 2, 3}), find_split_pair(k4, v4)));

    CounterRng rng(42, 0);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        std::vector<int> m1, m2;
        for (int v : x) (rng.coin() ? m1 : m2).push_back(v);
        VertexSet x1{std::move(m1)}, x2{std::move(m2)};
        OrderedSplitPair sp = find_split_pair(g, x);
        auto [q1, q2] = nice_split_pairs(g, x, x1, x2, sp);
        CHECK_NOTHROW(check_split_pair(g, q1));
        CHECK_NOTHROW(check_split_pair(g, q2));
        // niceness containments plus the outer-b condition
        VertexSet xbar = x.complement(n);
        CHECK(members_subset(sp.a, x1, q1.a));
        CHECK(members_subset(sp.a, x2, q2.a));
        CHECK(members_subset(q2.b, x1, q1.a));
        CHECK(members_subset(q1.b, x2, q2.a));
        CHECK(members_subset(q1.b, xbar, sp.b));
        CHECK(members_subset(q2.b, xbar, sp.b));
    }
}

TEST_CASE("subset linear independence is preserved downward") {
    CounterRng rng(43, 0);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + rng.below(8);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair sp = find_split_pair(g, x); // vec_X(a) independent
        std::vector<int> ym;
        for (int v : x)
            if (rng.coin()) ym.push_back(v);
        VertexSet y{std::move(ym)};
        std::vector<BitVector> vecs;
        VertexSet rest = y.complement(n);
        for (int v : sp.a)
            if (y.contains(v)) vecs.push_back(g.row_restricted(v, rest.members()));
        CHECK(rank_f2(vecs) == int(vecs.size()));
    }
}

TEST_CASE("same neighbourhood on the basis side implies equivalence") {
    CounterRng rng(44, 0);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + rng.below(8);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair sp = find_split_pair(g, x);
        VertexSet xbar = x.complement(n);
        for (int v : x)
            for (int w : x) {
                bool same_b = true;
                for (int b : sp.b)
                    if (g.adjacent(v, b) != g.adjacent(w, b)) same_b = false;
                if (!same_b) continue;
                for (int u : xbar) REQUIRE(g.adjacent(v, u) == g.adjacent(w, u));
            }
    }
}

TEST_CASE("stable colours refine the cut equivalence") {
    CounterRng rng(45, 0);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair sp = find_split_pair(g, x);
        std::vector<int> tuple = sp.a;
        tuple.insert(tuple.end(), sp.b.begin(), sp.b.end());
        VertexColouring chi = stable_vertex_colouring(individualise(g, tuple));
        VertexSet xbar = x.complement(n);
        for (int v : x)
            for (int w : x) {
                if (chi.colour[v] != chi.colour[w]) continue;
                for (int u : xbar) REQUIRE(g.adjacent(v, u) == g.adjacent(w, u));
            }
    }
}

TEST_CASE("flip graphs") {
    Graph p4 = Graph::path(4);
    VertexColouring uni{std::vector<int>(4, 0), 1};
    FlipFunction zero(1);
    CHECK(flip_graph(p4, uni, zero).edge_list() == p4.edge_list());

    FlipFunction one(1);
    one.set(0, 0, true);
    Graph comp = flip_graph(p4, uni, one);
    CHECK(comp.edge_list() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    // flipping twice restores the original
    CHECK(flip_graph(comp, uni, one).edge_list() == p4.edge_list());

    VertexColouring outside{{0, 0, 0, 5}, 6};
    CHECK_THROWS(flip_graph(p4, VertexColouring{{0, 0, 0, 9}, 1}, zero));
    CHECK_NOTHROW(flip_graph(p4, outside, FlipFunction(6)));
}

TEST_CASE("flip function construction separates the cut") {
    // without crossing edges the flip function is identically zero
    Graph gg = testutil::two_triangles();
    VertexSet x({0, 1, 2});
    FlipResult fr = find_flip_function(gg, x, find_split_pair(gg, x));
    CHECK(flip_graph(gg, fr.colouring, fr.f).edge_list() == gg.edge_list());

    Graph k4 = Graph::complete(4);
    VertexSet y({0, 1});
    FlipResult k = find_flip_function(k4, y, find_split_pair(k4, y));
    for (const VertexSet& comp : components_flip(k4, k.colouring, k.f))
        CHECK(within_one_side(comp, y));

    CounterRng rng(46, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + rng.below(9);
        Graph g = random_graph(n, rng);
        VertexSet z = random_subset(n, rng);
        FlipResult r = find_flip_function(g, z, find_split_pair(g, z));
        for (const VertexSet& comp : components_flip(g, r.colouring, r.f))
            REQUIRE(within_one_side(comp, z));
    }
}

TEST_CASE("components of flipped graphs") {
    Graph g = testutil::two_triangles();
    VertexColouring uni{std::vector<int>(6, 0), 1};
    CHECK(components_flip(g, uni, FlipFunction(1)) == connected_components(g));

    Graph k5 = Graph::complete(5);
    VertexColouring u5{std::vector<int>(5, 0), 1};
    FlipFunction all(1);
    all.set(0, 0, true);
    CHECK(components_flip(k5, u5, all).size() == 5);
}

TEST_CASE("flipping preserves isomorphisms both ways") {
    CounterRng rng(47, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + rng.below(6);
        Graph g = random_graph(n, rng);
        bool related = rng.coin();
        Graph h = related ? apply_permutation(g, random_permutation(n, rng)) : random_graph(n, rng);
        // one flip function over a shared colouring domain
        int classes = 2;
        std::vector<int> cg(n), ch(n);
        for (int v = 0; v < n; ++v) cg[v] = v % classes;
        if (related) {
            auto iso = brute_force_isomorphic(g, h);
            // colour h through some isomorphism so colours transport
            if (iso)
                for (int v = 0; v < n; ++v) ch[(*iso)[v]] = cg[v];
        } else {
            for (int v = 0; v < n; ++v) ch[v] = v % classes;
        }
        Graph gc = g.with_colours(cg), hc = h.with_colours(ch);
        FlipFunction f(classes);
        f.set(0, rng.below(classes), true);
        Graph gf = flip_graph(gc, VertexColouring{cg, classes}, f);
        Graph hf = flip_graph(hc, VertexColouring{ch, classes}, f);
        CHECK(brute_force_isomorphic(gc, hc).has_value() ==
              brute_force_isomorphic(gf, hf).has_value());
    }
}

TEST_CASE("colour refinement commutes with flips") {
    CounterRng rng(48, 0);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        // colour by the stable partition, then flip some colour pair
        VertexColouring chi = stable_vertex_colouring(g);
        Graph gc = g.with_colours(chi.colour);
        FlipFunction f(chi.num_colours);
        f.set(rng.below(chi.num_colours), rng.below(chi.num_colours), true);
        Graph gf = flip_graph(gc, chi, f);
        CHECK(classes_of(stable_vertex_colouring(gc).colour) ==
              classes_of(stable_vertex_colouring(gf).colour));
    }
}

TEST_CASE("pattern equivalence classes") {
    Graph k3 = Graph::complete(3);
    CHECK(equiv_class(k3, {}, {}, 1) == VertexSet::full(3));
    std::vector<int> a{0};
    CHECK(equiv_class(k3, a, {}, 1) == VertexSet({1, 2}));
    CHECK(equiv_class(k3, a, {}, 0) == VertexSet({0}));

    CounterRng rng(49, 0);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair sp = find_split_pair(g, x);
        int v = rng.below(n);
        VertexSet cls = equiv_class(g, sp.a, sp.b, v);
        std::set<int> anchors(sp.a.begin(), sp.a.end());
        anchors.insert(sp.b.begin(), sp.b.end());
        for (int w = 0; w < n; ++w) {
            bool same = true;
            for (int u : anchors)
                if (g.adjacent(v, u) != g.adjacent(w, u)) same = false;
            REQUIRE(cls.contains(w) == same);
        }
    }
}

TEST_CASE("flip extension graphs") {
    Graph p4 = Graph::path(4);
    // undefined everywhere: every pair falls through to a non-edge
    FlipExtension bot = make_flip_extension(p4, {}, {});
    CHECK(flip_extension_graph(p4, bot).edge_count() == 0);

    // threshold n everywhere keeps exactly the original edges
    FlipExtension keep = make_flip_extension(p4, {0}, {3});
    const int npat = 1 << keep.anchors.size();
    for (int m = 0; m < npat; ++m)
        for (int q = m; q < npat; ++q) keep.set_value(m, q, p4.size());
    CHECK(flip_extension_graph(p4, keep).edge_list() == p4.edge_list());

    // antisymmetry violation is rejected
    FlipExtension bad = make_flip_extension(p4, {0}, {3});
    bad.set_value(0, 1, 2);
    bad.set_value(1, 0, 2);
    CHECK_THROWS(flip_extension_graph(p4, bad));
}

TEST_CASE("flip extension construction separates the cut") {
    Graph k4 = Graph::complete(4);
    VertexSet whole = VertexSet::full(4);
    FlipExtension triv = find_flip_extension(k4, whole, find_split_pair(k4, whole));
    CHECK(flip_extension_graph(k4, triv).edge_list() == k4.edge_list());

    VertexSet x({0, 1});
    FlipExtension s = find_flip_extension(k4, x, find_split_pair(k4, x));
    for (const VertexSet& comp : connected_components(flip_extension_graph(k4, s)))
        CHECK(within_one_side(comp, x));
    for (int v : x)
        for (int w : comp_flip_extension(k4, s, v)) CHECK(x.contains(w));

    CounterRng rng(50, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + rng.below(9);
        Graph g = random_graph(n, rng);
        VertexSet z = random_subset(n, rng);
        FlipExtension se = find_flip_extension(g, z, find_split_pair(g, z));
        for (const VertexSet& comp : connected_components(flip_extension_graph(g, se)))
            REQUIRE(within_one_side(comp, z));
        int v = rng.below(n);
        CHECK(comp_flip_extension(g, se, v).contains(v));
    }
}

TEST_CASE("nice tuples inherit pattern equivalence") {
    CounterRng rng(51, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        std::vector<int> m1, m2;
        for (int v : x) (rng.coin() ? m1 : m2).push_back(v);
        VertexSet x1{std::move(m1)}, x2{std::move(m2)};
        OrderedSplitPair sp = find_split_pair(g, x);
        auto [p1, p2] = nice_split_pairs(g, x, x1, x2, sp);
        for (int v : x1)
            for (int w : x1) {
                if (equiv_class(g, p1.a, p1.b, v) != equiv_class(g, p1.a, p1.b, w)) continue;
                // equivalent under the child pair: also under the parent
                // pair and under the sibling pair
                REQUIRE(equiv_class(g, sp.a, sp.b, v).contains(w));
                REQUIRE(equiv_class(g, p2.a, p2.b, v).contains(w));
            }
    }
}

TEST_SUITE_END();
