#include "rankwl/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rankwl/cutrank.hpp"

namespace rankwl {

namespace {

void check_tree_shape(const std::vector<RankDecomposition::Node>& nodes, int root) {
    if (nodes.empty() || root < 0 || root >= int(nodes.size()))
        throw std::invalid_argument("rank decomposition: bad root");
    std::vector<int> indegree(nodes.size(), 0);
    for (const auto& nd : nodes) {
        const bool has_l = nd.left >= 0, has_r = nd.right >= 0;
        if (has_l != has_r)
            throw std::invalid_argument("rank decomposition: internal node needs two children");
        if (has_l) {
            if (nd.leaf_vertex >= 0)
                throw std::invalid_argument("rank decomposition: internal node carries a vertex");
            if (nd.left >= int(nodes.size()) || nd.right >= int(nodes.size()) || nd.left == nd.right)
                throw std::invalid_argument("rank decomposition: bad child link");
            ++indegree[nd.left];
            ++indegree[nd.right];
        } else if (nd.leaf_vertex < 0) {
            throw std::invalid_argument("rank decomposition: leaf without vertex");
        }
    }
    if (indegree[root] != 0) throw std::invalid_argument("rank decomposition: root has a parent");
    for (int t = 0; t < int(nodes.size()); ++t)
        if (t != root && indegree[t] != 1)
            throw std::invalid_argument("rank decomposition: node is not reachable exactly once");
}

} // namespace

RankDecomposition::RankDecomposition(std::vector<Node> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
    check_tree_shape(nodes_, root_);
}

RankDecomposition RankDecomposition::single(int vertex) {
    return RankDecomposition({Node{-1, -1, vertex}}, 0);
}

RankDecomposition RankDecomposition::caterpillar(std::span<const int> leaf_order) {
    if (leaf_order.empty()) throw std::invalid_argument("caterpillar: no leaves");
    std::vector<Node> nodes;
    nodes.push_back(Node{-1, -1, leaf_order[0]});
    int spine = 0;
    for (std::size_t i = 1; i < leaf_order.size(); ++i) {
        nodes.push_back(Node{-1, -1, leaf_order[i]});
        nodes.push_back(Node{spine, int(nodes.size()) - 1, -1});
        spine = int(nodes.size()) - 1;
    }
    return RankDecomposition(std::move(nodes), spine);
}

RankDecomposition RankDecomposition::parse(const std::string& text) {
    std::vector<Node> nodes;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_node = [&](auto&& self) -> int {
        skip_ws();
        if (pos >= text.size()) throw parse_error("decomposition: unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            int left = self(self);
            int right = self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw parse_error("decomposition: expected ')'");
            ++pos;
            nodes.push_back(Node{left, right, -1});
            return int(nodes.size()) - 1;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error(std::string("decomposition: unexpected character '") + text[pos] + "'");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        nodes.push_back(Node{-1, -1, v});
        return int(nodes.size()) - 1;
    };
    int root = parse_node(parse_node);
    skip_ws();
    if (pos != text.size()) throw parse_error("decomposition: trailing content");
    return RankDecomposition(std::move(nodes), root);
}

std::string RankDecomposition::serialise() const {
    std::ostringstream out;
    auto emit = [&](auto&& self, int t) -> void {
        if (is_leaf(t)) {
            out << nodes_[t].leaf_vertex;
            return;
        }
        out << '(';
        self(self, nodes_[t].left);
        out << ' ';
        self(self, nodes_[t].right);
        out << ')';
    };
    emit(emit, root_);
    return out.str();
}

int RankDecomposition::leaf_count() const {
    int c = 0;
    for (const auto& nd : nodes_)
        if (nd.left < 0) ++c;
    return c;
}

VertexSet RankDecomposition::gamma(int t) const {
    std::vector<int> members;
    auto walk = [&](auto&& self, int u) -> void {
        if (is_leaf(u)) {
            members.push_back(nodes_[u].leaf_vertex);
            return;
        }
        self(self, nodes_[u].left);
        self(self, nodes_[u].right);
    };
    walk(walk, t);
    return VertexSet(std::move(members));
}

bool validate_decomposition(const Graph& g, const RankDecomposition& d) {
    std::vector<bool> hit(g.size(), false);
    int leaves = 0;
    for (const auto& nd : d.nodes()) {
        if (nd.left >= 0) continue;
        ++leaves;
        if (nd.leaf_vertex >= g.size()) return false;
        if (hit[nd.leaf_vertex]) return false; // duplicate leaf: R.2 disjointness fails
        hit[nd.leaf_vertex] = true;
    }
    return leaves == g.size(); // all vertices covered: R.1 holds, R.3 by shape
}

int decomposition_width(const Graph& g, const RankDecomposition& d) {
    if (!validate_decomposition(g, d))
        throw std::invalid_argument("decomposition_width: invalid decomposition");
    int width = 0;
    for (int t = 0; t < int(d.nodes().size()); ++t)
        width = std::max(width, cut_rank(g, d.gamma(t)));
    return width;
}

// ---------------------------------------------------------------------------
// Exact rank width: W({v}) = rho({v}) and
// W(S) = max(rho(S), min over proper bipartitions S = S1 + S2 of
//            max(W(S1), W(S2))),
// answered at W(V). rho is memoised per subset since it is queried ~3^n times.

namespace {

// Order on subsets by their sorted vertex lists compared lexicographically.
bool set_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    int low = std::countr_zero(a ^ b);
    if ((a >> low) & 1u) return (b >> low) != 0; // a owns the first difference
    return (a >> low) == 0;                      // a is a proper prefix of b
}

// The canonical representative side of a bipartition: fewer vertices wins,
// ties by the lex-least sorted vertex list.
std::uint32_t smaller_side(std::uint32_t s1, std::uint32_t s2) {
    int p1 = std::popcount(s1), p2 = std::popcount(s2);
    if (p1 != p2) return p1 < p2 ? s1 : s2;
    return set_lex_less(s1, s2) ? s1 : s2;
}

} // namespace

RankWidthResult rank_width_exact(const Graph& g, Exec exec) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("rank_width_exact: empty graph");
    if (n > 16) throw guard_error("rank_width_exact: guarded at n <= 16");
    const bool parallel = exec == Exec::Parallel;
    const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);

    // Adjacency rows as masks.
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) adj[v] |= std::uint32_t(1) << w;

    // Cut ranks for every subset. Zero columns do not affect the rank, so
    // rows are masked rather than compacted.
    std::vector<std::uint8_t> rho(std::size_t(full) + 1, 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long mi = 0; mi <= (long long)(full); ++mi) {
        const std::uint32_t mask = std::uint32_t(mi);
        std::uint32_t rows[16];
        int cnt = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            rows[cnt++] = adj[v] & ~mask;
        }
        int rank = 0;
        for (int i = 0; i < cnt; ++i) {
            std::uint32_t r = rows[i];
            for (int b = 0; b < rank; ++b)
                if (r & (std::uint32_t(1) << std::countr_zero(rows[b]))) r ^= rows[b];
            if (r) rows[rank++] = r; // compact the reduced basis at the front
        }
        rho[mask] = std::uint8_t(rank);
    }

    std::vector<std::uint8_t> width(std::size_t(full) + 1, 0);
    std::vector<std::uint32_t> choice(std::size_t(full) + 1, 0);

    // Group subsets by population count; a subset only depends on proper
    // submasks, which live in earlier groups.
    std::vector<std::vector<std::uint32_t>> groups(n + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        groups[std::popcount(mask)].push_back(mask);

    for (int p = 1; p <= n; ++p) {
        auto& group = groups[p];
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
        for (long long gi = 0; gi < (long long)group.size(); ++gi) {
            const std::uint32_t mask = group[gi];
            if (p == 1) {
                width[mask] = rho[mask];
                continue;
            }
            int best = n + 1;
            std::uint32_t best_key = 0;
            const std::uint32_t lowbit = mask & (~mask + 1);
            // Each unordered bipartition once: sub keeps the lowest vertex.
            for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & lowbit)) continue;
                const std::uint32_t other = mask ^ sub;
                const int val = std::max(width[sub], width[other]);
                const std::uint32_t key = smaller_side(sub, other);
                if (val < best || (val == best && set_lex_less(key, best_key))) {
                    best = val;
                    best_key = key;
                }
            }
            width[mask] = std::uint8_t(std::max(int(rho[mask]), best));
            choice[mask] = best_key;
        }
    }

    // Witness tree from the recorded choices; the child holding the least
    // vertex of its set goes first.
    std::vector<RankDecomposition::Node> nodes;
    auto build = [&](auto&& self, std::uint32_t mask) -> int {
        if (std::popcount(mask) == 1) {
            nodes.push_back({-1, -1, std::countr_zero(mask)});
            return int(nodes.size()) - 1;
        }
        std::uint32_t s1 = choice[mask], s2 = mask ^ choice[mask];
        if (!(s1 & (mask & (~mask + 1)))) std::swap(s1, s2);
        int left = self(self, s1);
        int right = self(self, s2);
        nodes.push_back({left, right, -1});
        return int(nodes.size()) - 1;
    };
    int root = build(build, full);
    return RankWidthResult{int(width[full]), RankDecomposition(std::move(nodes), root)};
}

// ---------------------------------------------------------------------------
// k-expressions.

CliqueExpression::CliqueExpression(std::vector<Node> nodes, int root)
    : nodes_(std::move(nodes)), root_(root), label_count_(0) {
    if (nodes_.empty() || root_ < 0 || root_ >= int(nodes_.size()))
        throw std::invalid_argument("clique expression: bad root");
    for (const auto& nd : nodes_) {
        switch (nd.kind) {
        case Kind::Vertex:
            label_count_ = std::max(label_count_, nd.i);
            break;
        case Kind::AddEdges:
        case Kind::Relabel:
            label_count_ = std::max({label_count_, nd.i, nd.j});
            break;
        case Kind::Union:
            break;
        }
    }
}

namespace {

struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;
    std::vector<CliqueExpression::Node> nodes = {};

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string next_atom() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) throw parse_error("expression: expected a token");
        return text.substr(start, pos - start);
    }

    int next_label() {
        std::string atom = next_atom();
        for (char c : atom)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("expression: expected a label, got \"" + atom + "\"");
        int v = std::stoi(atom);
        if (v == 0) throw parse_error("expression: label 0 is not allowed");
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expression: expected '") + c + "'");
        ++pos;
    }

    int parse_expr() {
        expect('(');
        std::string op = next_atom();
        CliqueExpression::Node nd;
        if (op == "v") {
            nd.kind = CliqueExpression::Kind::Vertex;
            nd.i = next_label();
        } else if (op == "eta") {
            nd.kind = CliqueExpression::Kind::AddEdges;
            nd.i = next_label();
            nd.j = next_label();
            if (nd.i == nd.j)
                throw parse_error("expression: eta requires two distinct labels");
            nd.child = parse_expr();
        } else if (op == "rho") {
            nd.kind = CliqueExpression::Kind::Relabel;
            nd.i = next_label();
            nd.j = next_label();
            nd.child = parse_expr();
        } else if (op == "u") {
            nd.kind = CliqueExpression::Kind::Union;
            nd.left = parse_expr();
            nd.right = parse_expr();
        } else {
            throw parse_error("expression: unknown operator \"" + op + "\"");
        }
        expect(')');
        nodes.push_back(nd);
        return int(nodes.size()) - 1;
    }
};

} // namespace

CliqueExpression parse_expression(const std::string& text) {
    ExprParser p{text};
    int root = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("expression: trailing content");
    return CliqueExpression(std::move(p.nodes), root);
}

namespace {

struct PartialGraph {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;
};

PartialGraph eval_node(const CliqueExpression& e, int t) {
    const auto& nd = e.nodes()[t];
    using Kind = CliqueExpression::Kind;
    switch (nd.kind) {
    case Kind::Vertex:
        return PartialGraph{{}, {nd.i}};
    case Kind::AddEdges: {
        PartialGraph pg = eval_node(e, nd.child);
        for (int v = 0; v < int(pg.labels.size()); ++v)
            for (int w = 0; w < int(pg.labels.size()); ++w)
                if (pg.labels[v] == nd.i && pg.labels[w] == nd.j && v < w)
                    pg.edges.emplace_back(v, w);
        // labels partition the vertices and i != j, so v != w is automatic
        // for cross pairs; v > w pairs are covered with the roles swapped.
        for (int v = 0; v < int(pg.labels.size()); ++v)
            for (int w = 0; w < int(pg.labels.size()); ++w)
                if (pg.labels[v] == nd.j && pg.labels[w] == nd.i && v < w)
                    pg.edges.emplace_back(v, w);
        return pg;
    }
    case Kind::Relabel: {
        PartialGraph pg = eval_node(e, nd.child);
        for (int& l : pg.labels)
            if (l == nd.i) l = nd.j;
        return pg;
    }
    case Kind::Union: {
        PartialGraph a = eval_node(e, nd.left);
        PartialGraph b = eval_node(e, nd.right);
        int off = int(a.labels.size());
        for (auto [u, v] : b.edges) a.edges.emplace_back(u + off, v + off);
        a.labels.insert(a.labels.end(), b.labels.begin(), b.labels.end());
        return a;
    }
    }
    throw std::logic_error("evaluate_expression: bad node");
}

} // namespace

EvaluatedExpression evaluate_expression(const CliqueExpression& e) {
    PartialGraph pg = eval_node(e, e.root());
    // Duplicate insertions from repeated eta applications collapse here.
    std::sort(pg.edges.begin(), pg.edges.end());
    pg.edges.erase(std::unique(pg.edges.begin(), pg.edges.end()), pg.edges.end());
    Graph g(int(pg.labels.size()), pg.edges);
    return EvaluatedExpression{std::move(g), std::move(pg.labels)};
}

} // namespace rankwl
