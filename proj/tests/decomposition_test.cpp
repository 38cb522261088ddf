#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rankwl/common.hpp"
#include "rankwl/cutrank.hpp"
#include "rankwl/decomposition.hpp"
#include "rankwl/verify.hpp"

using namespace rankwl;

namespace {

// Serialisations of every leaf-labelled binary tree over the vertices in
// `mask`, each unordered tree once (the split containing the least vertex
// goes left). (2n-3)!! trees for n leaves.
std::vector<std::string> all_tree_shapes(std::uint64_t mask) {
    VertexSet x = VertexSet::from_mask(mask);
    if (x.size() == 1) return {std::to_string(x[0])};
    std::vector<std::string> out;
    std::uint64_t low = mask & (~mask + 1);
    for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        for (const auto& l : all_tree_shapes(sub))
            for (const auto& r : all_tree_shapes(mask ^ sub))
                out.push_back("(" + l + " " + r + ")");
    }
    return out;
}

// Minimum width over every decomposition, built and measured through the
// public decomposition API. The doubly-exponential reference for the DP.
int min_width_over_all_trees(const Graph& g) {
    int best = 1 << 20;
    for (const auto& text : all_tree_shapes((std::uint64_t(1) << g.size()) - 1))
        best = std::min(best, decomposition_width(g, RankDecomposition::parse(text)));
    return best;
}

} // namespace

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("structural construction rules") {
    CHECK_NOTHROW(RankDecomposition::single(0));
    CHECK_NOTHROW(RankDecomposition::caterpillar(std::vector<int>{0, 1, 2}));
    // one child only
    CHECK_THROWS(RankDecomposition({{0, -1, -1}, {-1, -1, 0}}, 0));
    // child out of range
    CHECK_THROWS(RankDecomposition({{1, 5, -1}, {-1, -1, 0}}, 0));
    // node referenced twice
    CHECK_THROWS(RankDecomposition({{1, 1, -1}, {-1, -1, 0}}, 0));
}

TEST_CASE("validation against a graph") {
    CHECK(validate_decomposition(Graph::edgeless(1), RankDecomposition::single(0)));
    // leaf map missing a vertex
    CHECK_FALSE(validate_decomposition(Graph::edgeless(2), RankDecomposition::single(0)));
    // duplicate vertex at two leaves
    CHECK_FALSE(validate_decomposition(
        Graph::edgeless(2), RankDecomposition::caterpillar(std::vector<int>{0, 0})));
    // vertex out of range
    CHECK_FALSE(validate_decomposition(
        Graph::edgeless(2), RankDecomposition::caterpillar(std::vector<int>{0, 7})));
    CHECK(validate_decomposition(Graph::path(4),
                                 RankDecomposition::caterpillar(std::vector<int>{0, 1, 2, 3})));
}

TEST_CASE("decomposition width") {
    std::vector<int> order{0, 1, 2, 3};
    CHECK(decomposition_width(Graph::complete(4), RankDecomposition::caterpillar(order)) == 1);
    CHECK(decomposition_width(Graph::complete(4),
                              RankDecomposition::parse("((0 1) (2 3))")) == 1);
    CHECK(decomposition_width(Graph::edgeless(4), RankDecomposition::caterpillar(order)) == 0);

    std::vector<int> c5order{0, 1, 2, 3, 4};
    CHECK(decomposition_width(Graph::cycle(5), RankDecomposition::caterpillar(c5order)) == 2);

    CHECK_THROWS(decomposition_width(Graph::edgeless(3), RankDecomposition::single(0)));
}

TEST_CASE("serialisation round trip") {
    RankDecomposition d = RankDecomposition::parse("((0 1) (2 3))");
    CHECK(d.serialise() == "((0 1) (2 3))");
    CHECK(RankDecomposition::single(7).serialise() == "7");
    CHECK(RankDecomposition::parse("0").serialise() == "0");
    CHECK_THROWS_AS(RankDecomposition::parse("((0 1)"), parse_error);
    CHECK_THROWS_AS(RankDecomposition::parse("(0 1) x"), parse_error);
    CHECK(d.gamma(d.root()) == VertexSet({0, 1, 2, 3}));
}

TEST_CASE("exact rank width on known families") {
    for (int n = 2; n <= 8; ++n) CHECK(rank_width_exact(Graph::complete(n)).width == 1);
    CHECK(rank_width_exact(Graph::edgeless(5)).width == 0);
    CHECK(rank_width_exact(Graph::cycle(5)).width == 2);

    // trees have rank width at most 1 (regression values from the DP)
    CHECK(rank_width_exact(Graph::path(8)).width == 1);
    CHECK(rank_width_exact(Graph::complete_bipartite(1, 7)).width == 1);
    std::vector<int> spider_seq{0, 0, 1, 1, 2, 2}; // two-deep spider on 8 vertices
    CHECK(rank_width_exact(prufer_tree(8, spider_seq)).width == 1);

    CHECK_THROWS_AS(rank_width_exact(Graph::edgeless(17)), guard_error);
}

TEST_CASE("witness decompositions validate and have the reported width") {
    CounterRng rng(31, 0);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + rng.below(8);
        Graph g = random_graph(n, rng);
        RankWidthResult rw = rank_width_exact(g);
        CHECK(validate_decomposition(g, rw.witness));
        CHECK(decomposition_width(g, rw.witness) == rw.width);

        RankWidthResult serial = rank_width_exact(g, Exec::Serial);
        CHECK(serial.width == rw.width);
        CHECK(serial.witness.serialise() == rw.witness.serialise());
    }
}

TEST_CASE("subset DP agrees with enumerating every decomposition") {
    for (const Graph& g : all_graphs_up_to_iso(5))
        CHECK(rank_width_exact(g).width == min_width_over_all_trees(g));
    CounterRng rng(32, 0);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(4 + rng.below(3), rng);
        CHECK(rank_width_exact(g).width == min_width_over_all_trees(g));
    }
}

TEST_CASE("any valid decomposition is at least as wide as the optimum") {
    CounterRng rng(33, 0);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        auto order = random_permutation(n, rng);
        int w = decomposition_width(g, RankDecomposition::caterpillar(order));
        CHECK(w >= rank_width_exact(g).width);
    }
}

TEST_CASE("expression parsing") {
    CliqueExpression leaf = parse_expression("(v 1)");
    CHECK(leaf.nodes()[leaf.root()].kind == CliqueExpression::Kind::Vertex);
    CHECK(leaf.label_count() == 1);

    CliqueExpression k2 = parse_expression("(eta 1 2 (u (v 1) (v 2)))");
    CHECK(k2.label_count() == 2);

    CHECK_THROWS_AS(parse_expression("(foo 1)"), parse_error);
    CHECK_THROWS_AS(parse_expression("(eta 1 1 (v 1))"), parse_error);
    CHECK_THROWS_AS(parse_expression("(v 0)"), parse_error);
    CHECK_THROWS_AS(parse_expression("(v 1) junk"), parse_error);
    CHECK_THROWS_AS(parse_expression("(u (v 1)"), parse_error);
}

TEST_CASE("expression evaluation") {
    auto leaf = evaluate_expression(parse_expression("(v 1)"));
    CHECK(leaf.graph.size() == 1);
    CHECK(leaf.labels == std::vector<int>{1});

    auto k2 = evaluate_expression(parse_expression("(eta 1 2 (u (v 1) (v 2)))"));
    CHECK(k2.graph == Graph::complete(2));

    // union numbers the left operand first, relabel rewrites in place
    auto u = evaluate_expression(parse_expression("(rho 2 3 (u (v 1) (v 2)))"));
    CHECK(u.labels == std::vector<int>{1, 3});

    for (const auto& fx : expression_fixtures()) {
        CAPTURE(fx.name);
        auto ev = evaluate_expression(parse_expression(fx.text));
        if (fx.name == "k3") CHECK(brute_force_isomorphic(ev.graph, Graph::complete(3)).has_value());
        if (fx.name == "k6") CHECK(brute_force_isomorphic(ev.graph, Graph::complete(6)).has_value());
        if (fx.name == "p4") CHECK(brute_force_isomorphic(ev.graph, Graph::path(4)).has_value());
        if (fx.name == "p6") CHECK(brute_force_isomorphic(ev.graph, Graph::path(6)).has_value());
        if (fx.name == "c5") CHECK(brute_force_isomorphic(ev.graph, Graph::cycle(5)).has_value());
        if (fx.name == "k23")
            CHECK(brute_force_isomorphic(ev.graph, Graph::complete_bipartite(2, 3)).has_value());
        if (fx.name == "two-k3")
            CHECK(brute_force_isomorphic(ev.graph, testutil::two_triangles()).has_value());
        // the rank width of the defined graph never exceeds the label count
        CHECK(rank_width_exact(ev.graph).width <= parse_expression(fx.text).label_count());
    }
}

TEST_SUITE_END();
