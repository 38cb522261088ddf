#include "rankwl/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "rankwl/common.hpp"

namespace rankwl {

VertexSet::VertexSet(std::vector<int> members) : elems_(std::move(members)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 0)
        throw std::invalid_argument("VertexSet: negative vertex");
}

VertexSet VertexSet::full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    VertexSet s;
    s.elems_ = std::move(v);
    return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1u) v.push_back(i);
    VertexSet s;
    s.elems_ = std::move(v);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
    std::vector<int> v;
    v.reserve(n - size());
    std::size_t j = 0;
    for (int i = 0; i < n; ++i) {
        if (j < elems_.size() && elems_[j] == i) ++j;
        else v.push_back(i);
    }
    VertexSet s;
    s.elems_ = std::move(v);
    return s;
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (int v : elems_) {
        if (v >= 64) throw std::invalid_argument("VertexSet::mask: vertex >= 64");
        m |= std::uint64_t(1) << v;
    }
    return m;
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges, std::vector<int> colours)
    : n_(n), words_((n + 63) / 64 > 0 ? (n + 63) / 64 : 1),
      rows_(std::size_t(n) * words_, 0), colours_(std::move(colours)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (colours_.empty()) colours_.assign(n, 0);
    if (int(colours_.size()) != n)
        throw std::invalid_argument("Graph: colour count does not match vertex count");
    for (int c : colours_)
        if (c < 0) throw std::invalid_argument("Graph: negative colour");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        rows_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        rows_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    }
}

bool Graph::is_uncoloured() const {
    for (int c : colours_)
        if (c != 0) return false;
    return true;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int i = 0; i < words_; ++i)
        d += std::popcount(rows_[std::size_t(v) * words_ + i]);
    return d;
}

std::vector<int> Graph::neighbours(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

BitVector Graph::row_restricted(int v, std::span<const int> cols) const {
    BitVector out(int(cols.size()));
    for (int i = 0; i < int(cols.size()); ++i)
        if (adjacent(v, cols[i])) out.set(i, true);
    return out;
}

Graph Graph::with_colours(std::vector<int> colours) const {
    Graph g = *this;
    if (int(colours.size()) != n_)
        throw std::invalid_argument("with_colours: colour count does not match");
    for (int c : colours)
        if (c < 0) throw std::invalid_argument("with_colours: negative colour");
    g.colours_ = std::move(colours);
    return g;
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edge_list();
    for (auto [u, v] : b.edge_list()) e.emplace_back(a.size() + u, a.size() + v);
    std::vector<int> colours = a.colours();
    for (int c : b.colours()) colours.push_back(c);
    return Graph(a.size() + b.size(), e, std::move(colours));
}

Graph Graph::petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, e);
}

// ---------------------------------------------------------------------------
// Edge-list format: header "n m", optional "colours c_0 ... c_{n-1}" line,
// then m lines "u v" with 0 <= u < v < n. '#' starts a comment line.

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

[[noreturn]] void fail_line(const Line& l, const std::string& why) {
    throw parse_error("edge list: line " + std::to_string(l.number) + ": " + why +
                      " (\"" + l.text + "\")");
}

std::vector<long long> parse_ints(const Line& l, const std::string& why_if_bad) {
    std::istringstream in(l.text);
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) fail_line(l, why_if_bad);
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("edge list: empty input");

    auto header = parse_ints(lines[0], "malformed header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        fail_line(lines[0], "malformed header, expected \"n m\"");
    int n = int(header[0]);
    long long m = header[1];

    std::size_t next = 1;
    std::vector<int> colours;
    if (next < lines.size()) {
        std::istringstream in(lines[next].text);
        std::string word;
        in >> word;
        if (word == "colours") {
            long long c;
            while (in >> c) {
                if (c < 0) fail_line(lines[next], "negative colour");
                colours.push_back(int(c));
            }
            if (!in.eof() || int(colours.size()) != n)
                fail_line(lines[next], "colours line must list one colour per vertex");
            ++next;
        }
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint8_t> seen(std::size_t(n) * n, 0);
    for (long long i = 0; i < m; ++i, ++next) {
        if (next >= lines.size())
            throw parse_error("edge list: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(i));
        const Line& l = lines[next];
        auto nums = parse_ints(l, "malformed edge");
        if (nums.size() != 2) fail_line(l, "malformed edge, expected \"u v\"");
        long long u = nums[0], v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n) fail_line(l, "vertex index out of range");
        if (u == v) fail_line(l, "loop edge");
        if (u > v) fail_line(l, "edge endpoints must satisfy u < v");
        if (seen[std::size_t(u) * n + v]) fail_line(l, "duplicate edge");
        seen[std::size_t(u) * n + v] = 1;
        edges.emplace_back(int(u), int(v));
    }
    if (next < lines.size()) fail_line(lines[next], "trailing content after last edge");
    return Graph(n, edges, std::move(colours));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edge_list();
    out << g.size() << ' ' << edges.size() << '\n';
    if (!g.is_uncoloured()) {
        out << "colours";
        for (int v = 0; v < g.size(); ++v) out << ' ' << g.colour(v);
        out << '\n';
    }
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// graph6: standard ASCII encoding of an uncoloured graph. The upper triangle
// is listed column by column ((0,1),(0,2),(1,2),(0,3),...), six bits per byte,
// each byte offset by 63.

namespace {
constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'
} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.starts_with(">>graph6<<")) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw parse_error("graph6: vertex counts above 258047 are not supported");
        if (s.size() < 4) throw parse_error("graph6: truncated vertex count");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            int b = int(s[pos]);
            if (b < kG6Lo || b > kG6Hi)
                throw parse_error("graph6: invalid byte at position " + std::to_string(pos));
            n = (n << 6) | (b - kG6Lo);
        }
    } else {
        int b = int(s[0]);
        if (b < kG6Lo || b > kG6Hi) throw parse_error("graph6: invalid byte at position 0");
        n = b - kG6Lo;
        pos = 1;
    }

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if ((long long)s.size() - (long long)pos != nbytes)
        throw parse_error("graph6: body length mismatch, expected " + std::to_string(nbytes) +
                          " bytes, got " + std::to_string(s.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int b = int(s[pos + bit / 6]);
            if (b < kG6Lo || b > kG6Hi)
                throw parse_error("graph6: invalid byte at position " + std::to_string(pos + bit / 6));
            if ((b - kG6Lo) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(int(n), edges);
}

std::string to_graph6(const Graph& g) {
    if (!g.is_uncoloured())
        throw std::invalid_argument("to_graph6: graph6 cannot carry vertex colours");
    long long n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + kG6Lo));
        out.push_back(char(((n >> 6) & 63) + kG6Lo));
        out.push_back(char((n & 63) + kG6Lo));
    } else {
        throw std::invalid_argument("to_graph6: vertex count too large");
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + kG6Lo));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(char((acc << (6 - nb)) + kG6Lo));
    return out;
}

Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '#') { // comment line: skip to newline
            // fall through to edge-list parsing; only edge lists carry comments
            return parse_edge_list(text);
        }
        if (c >= '0' && c <= '9') return parse_edge_list(text);
        return parse_graph6(text);
    }
    throw parse_error("empty graph input");
}

// ---------------------------------------------------------------------------

Graph induced_subgraph(const Graph& g, const VertexSet& a) {
    for (int v : a)
        if (v >= g.size()) throw std::invalid_argument("induced_subgraph: member out of range");
    const auto& mem = a.members();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colours(a.size());
    for (int i = 0; i < a.size(); ++i) {
        colours[i] = g.colour(mem[i]);
        for (int j = i + 1; j < a.size(); ++j)
            if (g.adjacent(mem[i], mem[j])) edges.emplace_back(i, j);
    }
    return Graph(a.size(), edges, std::move(colours));
}

Graph apply_permutation(const Graph& g, std::span<const int> pi) {
    int n = g.size();
    if (int(pi.size()) != n) throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<bool> hit(n, false);
    for (int v : pi) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("apply_permutation: not a bijection");
        hit[v] = true;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(pi[u], pi[v]);
    std::vector<int> colours(n);
    for (int v = 0; v < n; ++v) colours[pi[v]] = g.colour(v);
    return Graph(n, edges, std::move(colours));
}

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map,
                    std::vector<bool>& used, int v) {
    int n = g.size();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        if (h.colour(w) != g.colour(v) || h.degree(w) != g.degree(v)) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v) != h.adjacent(map[u], w)) { ok = false; break; }
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_mapping(g, h, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> brute_force_isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    int n = g.size();
    // (colour, degree) class histograms must match
    std::vector<std::pair<int, int>> cg(n), ch(n);
    for (int v = 0; v < n; ++v) {
        cg[v] = {g.colour(v), g.degree(v)};
        ch[v] = {h.colour(v), h.degree(v)};
    }
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    if (cg != ch) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (extend_mapping(g, h, map, used, 0)) return map;
    return std::nullopt;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (g.adjacent(v, w) && comp[w] < 0) {
                    comp[w] = s;
                    stack.push_back(w);
                }
        }
        out.push_back(VertexSet(std::move(members)));
    }
    return out;
}

} // namespace rankwl
