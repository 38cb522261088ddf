#include "rankwl/splitflip.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rankwl/common.hpp"
#include "rankwl/cutrank.hpp"

namespace rankwl {

BitVector x_vector(const Graph& g, const VertexSet& x, int v) {
    if (!x.contains(v)) throw std::invalid_argument("x_vector: vertex not in X");
    VertexSet rest = x.complement(g.size());
    return g.row_restricted(v, rest.members());
}

OrderedSplitPair find_split_pair(const Graph& g, const VertexSet& x) {
    for (int v : x)
        if (v >= g.size()) throw std::invalid_argument("find_split_pair: member out of range");
    OrderedSplitPair sp;
    sp.for_set = x;
    VertexSet rest = x.complement(g.size());
    if (x.empty() || rest.empty()) return sp; // designated empty pair

    std::vector<BitVector> vx;
    for (int v : x) vx.push_back(g.row_restricted(v, rest.members()));
    for (int idx : greedy_basis(vx)) sp.a.push_back(x[idx]);

    std::vector<BitVector> vr;
    for (int v : rest) vr.push_back(g.row_restricted(v, x.members()));
    for (int idx : greedy_basis(vr)) sp.b.push_back(rest[idx]);
    return sp;
}

namespace {

void check_basis_tuple(const Graph& g, const VertexSet& side, std::span<const int> tuple,
                       const char* what) {
    std::vector<int> seen;
    for (int v : tuple) {
        if (!side.contains(v))
            throw std::invalid_argument(std::string("split pair: ") + what +
                                        " entry outside its side");
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument(std::string("split pair: ") + what + " repeats a vertex");
    VertexSet rest = side.complement(g.size());
    std::vector<BitVector> vecs;
    for (int v : tuple) vecs.push_back(g.row_restricted(v, rest.members()));
    if (rank_f2(vecs) != int(tuple.size()))
        throw std::invalid_argument(std::string("split pair: ") + what +
                                    " vectors are not independent");
    if (int(tuple.size()) != cut_rank(g, side))
        throw std::invalid_argument(std::string("split pair: ") + what +
                                    " does not span the cut space");
}

} // namespace

void check_split_pair(const Graph& g, const OrderedSplitPair& sp) {
    const VertexSet& x = sp.for_set;
    for (int v : x)
        if (v >= g.size()) throw std::invalid_argument("split pair: set member out of range");
    check_basis_tuple(g, x, sp.a, "a");
    check_basis_tuple(g, x.complement(g.size()), sp.b, "b");
}

std::pair<OrderedSplitPair, OrderedSplitPair> nice_split_pairs(
    const Graph& g, const VertexSet& x, const VertexSet& x1, const VertexSet& x2,
    const OrderedSplitPair& sp) {
    // X must be the disjoint union of X1 and X2: the deduplicated union has
    // to give back X without losing any member to an overlap.
    std::vector<int> merged;
    for (int v : x1) merged.push_back(v);
    for (int v : x2) merged.push_back(v);
    if (VertexSet(merged) != x || x1.size() + x2.size() != x.size())
        throw std::invalid_argument("nice_split_pairs: X1, X2 do not partition X");
    if (sp.for_set != x) throw std::invalid_argument("nice_split_pairs: split pair is for a different set");
    check_split_pair(g, sp);

    const VertexSet* halves[2] = {&x1, &x2};
    std::vector<int> a_tuple[2], b_tuple[2];

    // a_i: extend the inherited seed a cap X_i to a basis over X_i.
    for (int i = 0; i < 2; ++i) {
        const VertexSet& xi = *halves[i];
        VertexSet rest = xi.complement(g.size());
        std::vector<int> candidates;
        for (int v : sp.a)
            if (xi.contains(v)) candidates.push_back(v);
        const int seed_len = int(candidates.size());
        for (int v : xi)
            if (std::find(candidates.begin(), candidates.begin() + seed_len, v) ==
                candidates.begin() + seed_len)
                candidates.push_back(v);
        std::vector<BitVector> vecs;
        for (int v : candidates) vecs.push_back(g.row_restricted(v, rest.members()));
        std::vector<int> seed(seed_len);
        for (int s = 0; s < seed_len; ++s) seed[s] = s;
        for (int idx : extend_basis(seed, vecs)) a_tuple[i].push_back(candidates[idx]);
    }

    // b_i: greedy basis inside b union a_{3-i}, scanned in vertex order.
    for (int i = 0; i < 2; ++i) {
        const VertexSet& xi = *halves[i];
        std::vector<int> pool = sp.b;
        for (int v : a_tuple[1 - i]) pool.push_back(v);
        std::sort(pool.begin(), pool.end());
        std::vector<BitVector> vecs;
        for (int v : pool) vecs.push_back(g.row_restricted(v, xi.members()));
        for (int idx : greedy_basis(vecs)) b_tuple[i].push_back(pool[idx]);
    }

    return {OrderedSplitPair{a_tuple[0], b_tuple[0], x1},
            OrderedSplitPair{a_tuple[1], b_tuple[1], x2}};
}

Graph flip_graph(const Graph& g, const VertexColouring& chi, const FlipFunction& f) {
    const int n = g.size();
    if (int(chi.colour.size()) != n)
        throw std::invalid_argument("flip_graph: colouring size mismatch");
    for (int v = 0; v < n; ++v)
        if (chi.colour[v] < 0 || chi.colour[v] >= f.num_colours())
            throw std::invalid_argument("flip_graph: colour pair missing from flip function");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (g.adjacent(v, w) != f.get(chi.colour[v], chi.colour[w]))
                edges.emplace_back(v, w);
    // The flipped graph keeps the colouring it was flipped against.
    return Graph(n, edges, chi.colour);
}

FlipResult find_flip_function(const Graph& g, const VertexSet& x, const OrderedSplitPair& sp) {
    if (sp.for_set != x)
        throw std::invalid_argument("find_flip_function: split pair is for a different set");
    check_split_pair(g, sp);
    std::vector<int> tuple = sp.a;
    tuple.insert(tuple.end(), sp.b.begin(), sp.b.end());
    VertexColouring chi = stable_vertex_colouring(individualise(g, tuple));

    FlipFunction f(chi.num_colours);
    for (auto [v, w] : g.edge_list())
        if (x.contains(v) != x.contains(w)) f.set(chi.colour[v], chi.colour[w], true);
    return FlipResult{std::move(f), std::move(chi)};
}

std::vector<VertexSet> components_flip(const Graph& g, const VertexColouring& chi,
                                       const FlipFunction& f) {
    return connected_components(flip_graph(g, chi, f));
}

VertexSet equiv_class(const Graph& g, std::span<const int> a, std::span<const int> b, int v) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("equiv_class: vertex out of range");
    std::vector<int> anchors(a.begin(), a.end());
    anchors.insert(anchors.end(), b.begin(), b.end());
    auto pattern = [&](int u) {
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < anchors.size(); ++i)
            if (g.adjacent(u, anchors[i])) p |= std::uint64_t(1) << i;
        return p;
    };
    // Repeated anchors contribute identical bits, so collapsing is implicit.
    std::uint64_t pv = pattern(v);
    std::vector<int> members;
    for (int u = 0; u < g.size(); ++u)
        if (pattern(u) == pv) members.push_back(u);
    return VertexSet(std::move(members));
}

// ---------------------------------------------------------------------------
// Flip extensions.

int FlipExtension::pattern_of(const Graph& g, int v) const {
    int p = 0;
    for (std::size_t i = 0; i < anchors.size(); ++i)
        if (g.adjacent(v, anchors[i])) p |= 1 << i;
    return p;
}

FlipExtension make_flip_extension(const Graph& g, std::vector<int> a, std::vector<int> b) {
    FlipExtension s;
    s.a = std::move(a);
    s.b = std::move(b);
    for (int v : s.a) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("flip extension: vertex out of range");
        if (std::find(s.anchors.begin(), s.anchors.end(), v) == s.anchors.end())
            s.anchors.push_back(v);
    }
    for (int v : s.b) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("flip extension: vertex out of range");
        if (std::find(s.anchors.begin(), s.anchors.end(), v) == s.anchors.end())
            s.anchors.push_back(v);
    }
    if (s.anchors.size() > 10) throw guard_error("flip extension: too many anchor vertices");
    s.f.assign(std::size_t(1) << (2 * s.anchors.size()), 0);
    return s;
}

namespace {

std::string pattern_name(const FlipExtension& s, int m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < s.anchors.size(); ++i)
        if (m >> i & 1) {
            if (!first) out << ',';
            out << s.anchors[i];
            first = false;
        }
    out << '}';
    return out.str();
}

} // namespace

Graph flip_extension_graph(const Graph& g, const FlipExtension& s) {
    const int n = g.size();
    const int m = int(s.anchors.size());
    const int npat = 1 << m;
    if (int(s.f.size()) != npat * npat)
        throw std::invalid_argument("flip extension: table size mismatch");
    for (int p = 0; p < npat; ++p)
        for (int q = p + 1; q < npat; ++q)
            if (s.value(p, q) > 0 && s.value(q, p) > 0)
                throw std::invalid_argument("flip extension: both orders defined for patterns " +
                                            pattern_name(s, p) + ", " + pattern_name(s, q));

    std::vector<int> pat(n);
    for (int v = 0; v < n; ++v) pat[v] = s.pattern_of(g, v);
    // count[v][P]: neighbours of v whose pattern is P
    std::vector<int> count(std::size_t(n) * npat, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) ++count[std::size_t(v) * npat + pat[w]];

    // Edge decision with `from` as the counting vertex.
    auto decide = [&](int from, int to, int d) {
        int c = count[std::size_t(from) * npat + pat[to]];
        return g.adjacent(from, to) ? (c < d) : (c >= d);
    };

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            const int pv = pat[v], pw = pat[w];
            bool edge = false;
            if (pv == pw) {
                int d = s.value(pv, pw);
                if (d > 0) {
                    edge = decide(v, w, d);
                    if (edge != decide(w, v, d))
                        throw std::invalid_argument(
                            "flip extension: asymmetric decision within pattern class " +
                            pattern_name(s, pv));
                }
            } else if (int d = s.value(pv, pw); d > 0) {
                edge = decide(v, w, d);
            } else if (int e = s.value(pw, pv); e > 0) {
                edge = decide(w, v, e);
            } // both undefined: non-edge
            if (edge) edges.emplace_back(v, w);
        }
    return Graph(n, edges, g.colours());
}

FlipExtension find_flip_extension(const Graph& g, const VertexSet& x, const OrderedSplitPair& sp) {
    if (sp.for_set != x)
        throw std::invalid_argument("find_flip_extension: split pair is for a different set");
    check_split_pair(g, sp);
    FlipExtension s = make_flip_extension(g, sp.a, sp.b);
    const int n = g.size();
    const int npat = 1 << s.anchors.size();

    std::vector<int> pat(n);
    for (int v = 0; v < n; ++v) pat[v] = s.pattern_of(g, v);
    std::vector<int> count(std::size_t(n) * npat, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) ++count[std::size_t(v) * npat + pat[w]];

    std::vector<std::vector<int>> in_x(npat), out_x(npat);
    for (int v = 0; v < n; ++v)
        (x.contains(v) ? in_x[pat[v]] : out_x[pat[v]]).push_back(v);

    auto cross = [&](const std::vector<int>& from, const std::vector<int>& to, bool want_edge) {
        for (int v : from)
            for (int w : to)
                if (g.adjacent(v, w) == want_edge) return true;
        return false;
    };
    auto inconsistent = [&](int m1, int n1, const char* why) {
        throw std::runtime_error("find_flip_extension: inconsistent pattern pair " +
                                 pattern_name(s, m1) + ", " + pattern_name(s, n1) + ": " + why);
    };

    for (int m1 = 0; m1 < npat; ++m1)
        for (int n1 = m1; n1 < npat; ++n1) {
            // P, Pb: the X and non-X sides of pattern class m1; Q, Qb likewise for n1.
            const bool edge_q_pb = cross(in_x[n1], out_x[m1], true);
            const bool edge_p_qb = cross(in_x[m1], out_x[n1], true);
            if (!edge_q_pb && !edge_p_qb) {
                // No crossing edges between the opposite sides: a threshold of
                // n keeps edges and adds none across the cut.
                s.set_value(m1, n1, n);
                continue;
            }
            // Normalise so the crossing edge runs Q x Pb.
            int ma = m1, na = n1;
            if (!edge_q_pb) std::swap(ma, na);
            const auto& P = in_x[ma];
            const auto& Pb = out_x[ma];
            const auto& Q = in_x[na];
            const auto& Qb = out_x[na];
            if (cross(Q, Pb, false)) inconsistent(ma, na, "Q x Pb is not complete");
            if (!cross(P, Qb, false)) {
                s.set_value(ma, na, 1);
                continue;
            }
            if (cross(P, Qb, true)) inconsistent(ma, na, "P x Qb is not empty");
            // Threshold case: separate by cross-degrees into the other class.
            auto minmax = [&](const std::vector<int>& side, int cls) {
                int lo = n + 1, hi = -1;
                for (int v : side) {
                    int c = count[std::size_t(v) * npat + cls];
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                return std::pair{lo, hi};
            };
            auto [p_lo, p_hi] = minmax(P, na);
            auto [pb_lo, pb_hi] = minmax(Pb, na);
            auto [q_lo, q_hi] = minmax(Q, ma);
            auto [qb_lo, qb_hi] = minmax(Qb, ma);
            if (p_hi > pb_lo || q_lo < qb_hi) inconsistent(ma, na, "degree inequalities fail");
            if (p_hi < pb_lo)
                s.set_value(ma, na, pb_lo);
            else if (q_lo > qb_hi)
                s.set_value(na, ma, q_lo);
            else
                inconsistent(ma, na, "neither degree inequality is strict");
        }
    return s;
}

VertexSet comp_flip_extension(const Graph& g, const FlipExtension& s, int v) {
    if (v < 0 || v >= g.size())
        throw std::invalid_argument("comp_flip_extension: vertex out of range");
    for (const VertexSet& c : connected_components(flip_extension_graph(g, s)))
        if (c.contains(v)) return c;
    throw std::logic_error("comp_flip_extension: components do not cover the graph");
}

} // namespace rankwl
