#include "rankwl/wl.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rankwl {

long long TupleColouring::index_of(std::span<const int> tuple) const {
    if (int(tuple.size()) != k) throw std::invalid_argument("index_of: tuple arity mismatch");
    long long idx = 0;
    for (int v : tuple) {
        if (v < 0 || v >= n) throw std::invalid_argument("index_of: vertex out of range");
        idx = idx * n + v;
    }
    return idx;
}

int TupleColouring::diag_id(int v) const {
    long long idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * n + v;
    return colour[idx];
}

namespace {

constexpr long long kMaxJointTuples = 8'000'000;

long long tuples_per_graph(int n, int k) {
    long long t = 1;
    for (int i = 0; i < k; ++i) {
        t *= n;
        if (t > kMaxJointTuples) throw guard_error("wl: n^k exceeds the tuple guard");
    }
    return t;
}

// Assigns canonical ids: distinct signatures sorted lexicographically get
// ids 0,1,2,... Signatures are fixed-stride slices of a flat buffer.
int assign_ids_flat(const std::vector<int>& buf, long long count, int stride,
                    std::vector<int>& out) {
    std::vector<long long> order(count);
    std::iota(order.begin(), order.end(), 0);
    const int* base = buf.data();
    std::sort(order.begin(), order.end(), [&](long long a, long long b) {
        return std::lexicographical_compare(base + a * stride, base + (a + 1) * stride,
                                            base + b * stride, base + (b + 1) * stride);
    });
    out.assign(count, 0);
    int id = -1;
    for (long long r = 0; r < count; ++r) {
        if (r == 0 || !std::equal(base + order[r] * stride, base + (order[r] + 1) * stride,
                                  base + order[r - 1] * stride))
            ++id;
        out[order[r]] = id;
    }
    return id + 1;
}

int assign_ids_vectors(const std::vector<std::vector<int>>& sigs, std::vector<int>& out) {
    std::vector<long long> order(sigs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](long long a, long long b) { return sigs[a] < sigs[b]; });
    out.assign(sigs.size(), 0);
    int id = -1;
    for (std::size_t r = 0; r < sigs.size(); ++r) {
        if (r == 0 || sigs[order[r]] != sigs[order[r - 1]]) ++id;
        out[order[r]] = id;
    }
    return id + 1;
}

// Refinement over one or two graphs of equal order, sharing one signature
// dictionary per round so that ids are comparable across graphs.
struct Joint {
    std::vector<const Graph*> graphs;
    int n = 0, k = 0;
    long long per = 0;            // n^k
    std::vector<int> colour;      // graph g owns [g*per, (g+1)*per)
    int num_colours = 0;
    int rounds = 0;
};

void joint_initial(Joint& j) {
    long long total = j.per * (long long)j.graphs.size();
    if (j.k == 1) {
        std::vector<int> buf(total);
        for (std::size_t gi = 0; gi < j.graphs.size(); ++gi)
            for (int v = 0; v < j.n; ++v) buf[gi * j.per + v] = j.graphs[gi]->colour(v);
        j.num_colours = assign_ids_flat(buf, total, 1, j.colour);
        return;
    }
    // Isomorphism type of the ordered subgraph: colour sequence, equality
    // pattern, adjacency pattern.
    const int k = j.k, n = j.n;
    const int stride = k + 2 * k * k;
    std::vector<int> buf(total * stride);
    std::vector<int> digits(k);
    for (long long t = 0; t < total; ++t) {
        const Graph& g = *j.graphs[std::size_t(t / j.per)];
        long long rest = t % j.per;
        for (int i = k - 1; i >= 0; --i) {
            digits[i] = int(rest % n);
            rest /= n;
        }
        int* sig = buf.data() + t * stride;
        for (int i = 0; i < k; ++i) sig[i] = g.colour(digits[i]);
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                sig[k + i * k + l] = (digits[i] == digits[l]) ? 1 : 0;
                sig[k + k * k + i * k + l] = g.adjacent(digits[i], digits[l]) ? 1 : 0;
            }
    }
    j.num_colours = assign_ids_flat(buf, total, stride, j.colour);
}

// One refinement round; returns the new colour count.
int joint_round(const Joint& j, std::vector<int>& next, bool parallel) {
    const int n = j.n, k = j.k;
    const long long per = j.per;
    const long long total = per * (long long)j.graphs.size();
    const std::vector<int>& prev = j.colour;

    if (k == 1) {
        std::vector<std::vector<int>> sigs(total);
        for (std::size_t gi = 0; gi < j.graphs.size(); ++gi) {
            const Graph& g = *j.graphs[gi];
            for (int v = 0; v < n; ++v) {
                std::vector<int> s;
                s.reserve(1 + g.degree(v));
                s.push_back(prev[gi * per + v]);
                for (int w = 0; w < n; ++w)
                    if (g.adjacent(v, w)) s.push_back(prev[gi * per + w]);
                std::sort(s.begin() + 1, s.end());
                sigs[gi * per + v] = std::move(s);
            }
        }
        return assign_ids_vectors(sigs, next);
    }

    // Signature of a tuple: previous id followed by the multiset, over all
    // substituted vertices w, of the k-vector of ids of the substituted
    // tuples. The multiset is encoded as the n chunks sorted lexicographically.
    const int stride = 1 + n * k;
    std::vector<int> buf(total * stride);
    std::vector<long long> pw(k);
    pw[k - 1] = 1;
    for (int i = k - 2; i >= 0; --i) pw[i] = pw[i + 1] * n;

#pragma omp parallel if (parallel)
    {
        std::vector<int> digits(k), chunks(std::size_t(n) * k);
        std::vector<int> ord(n);
#pragma omp for schedule(static)
        for (long long t = 0; t < total; ++t) {
            long long rest = t % per;
            for (int i = k - 1; i >= 0; --i) {
                digits[i] = int(rest % n);
                rest /= n;
            }
            // Substituted indices stay within the owning graph's block.
            for (int w = 0; w < n; ++w)
                for (int i = 0; i < k; ++i)
                    chunks[std::size_t(w) * k + i] = prev[t + ((long long)w - digits[i]) * pw[i]];
            std::iota(ord.begin(), ord.end(), 0);
            std::sort(ord.begin(), ord.end(), [&](int a, int b) {
                return std::lexicographical_compare(
                    chunks.begin() + std::size_t(a) * k, chunks.begin() + std::size_t(a + 1) * k,
                    chunks.begin() + std::size_t(b) * k, chunks.begin() + std::size_t(b + 1) * k);
            });
            int* sig = buf.data() + t * stride;
            sig[0] = prev[t];
            for (int r = 0; r < n; ++r)
                std::memcpy(sig + 1 + std::size_t(r) * k, chunks.data() + std::size_t(ord[r]) * k,
                            sizeof(int) * k);
        }
    }
    return assign_ids_flat(buf, total, stride, next);
}

Joint joint_stable(std::vector<const Graph*> graphs, int k, Exec exec) {
    if (k < 1) throw std::invalid_argument("wl: dimension must be at least 1");
    Joint j;
    j.graphs = std::move(graphs);
    j.n = j.graphs[0]->size();
    j.k = k;
    j.per = tuples_per_graph(j.n, k);
    if (j.per * (long long)j.graphs.size() > kMaxJointTuples)
        throw guard_error("wl: n^k exceeds the tuple guard");
    // round buffers hold one signature of 1 + n*k ids per tuple
    if (j.per * (long long)j.graphs.size() * (1 + (long long)j.n * k) > 100'000'000)
        throw guard_error("wl: refinement buffers exceed the memory guard");
    if (j.n == 0) return j;
    joint_initial(j);
    const bool parallel = exec == Exec::Parallel;
    long long bound = j.per * (long long)j.graphs.size();
    while (true) {
        std::vector<int> next;
        int count = joint_round(j, next, parallel);
        if (count == j.num_colours) break; // partition no longer strictly refines
        j.colour = std::move(next);
        j.num_colours = count;
        ++j.rounds;
        if (j.rounds > bound) throw std::logic_error("wl: refinement failed to stabilise");
    }
    return j;
}

TupleColouring colouring_of(const Joint& j, int graph_index) {
    TupleColouring tc;
    tc.k = j.k;
    tc.n = j.n;
    tc.num_colours = j.num_colours;
    tc.rounds = j.rounds;
    tc.colour.assign(j.colour.begin() + graph_index * j.per,
                     j.colour.begin() + (graph_index + 1) * j.per);
    return tc;
}

} // namespace

TupleColouring initial_colouring_k(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("initial_colouring_k: requires k >= 2");
    Joint j;
    j.graphs = {&g};
    j.n = g.size();
    j.k = k;
    j.per = tuples_per_graph(j.n, k);
    if (j.n > 0) joint_initial(j);
    return colouring_of(j, 0);
}

TupleColouring wl_stable_k(const Graph& g, int k, Exec exec) {
    Joint j = joint_stable({&g}, k, exec);
    return colouring_of(j, 0);
}

Graph individualise(const Graph& g, std::span<const int> tuple) {
    const int l = int(tuple.size());
    for (int v : tuple)
        if (v < 0 || v >= g.size()) throw std::invalid_argument("individualise: vertex out of range");
    // Position colours are 1-based (1..l); the later occurrence of a repeated
    // vertex wins. Original colours move above the reserved range.
    std::vector<int> c(g.size());
    for (int v = 0; v < g.size(); ++v) c[v] = g.colour(v) + l + 1;
    for (int i = 0; i < l; ++i) c[tuple[i]] = i + 1;
    return g.with_colours(std::move(c));
}

bool wl_distinguishes(const Graph& g, const Graph& h, int k, Exec exec) {
    if (g.size() != h.size()) return true;
    if (g.size() == 0) return false;
    Joint j = joint_stable({&g, &h}, k, exec);
    std::vector<long long> cg(j.num_colours, 0), ch(j.num_colours, 0);
    for (long long t = 0; t < j.per; ++t) {
        ++cg[j.colour[t]];
        ++ch[j.colour[j.per + t]];
    }
    return cg != ch;
}

std::vector<std::pair<int, long long>> colour_histogram(const TupleColouring& c) {
    std::vector<long long> counts(c.num_colours, 0);
    for (int id : c.colour) ++counts[id];
    std::vector<std::pair<int, long long>> out;
    out.reserve(counts.size());
    for (int id = 0; id < c.num_colours; ++id) out.emplace_back(id, counts[id]);
    return out;
}

VertexColouring vertex_colouring(const TupleColouring& c) {
    if (c.k != 1) throw std::invalid_argument("vertex_colouring: requires a 1-dimensional colouring");
    return VertexColouring{c.colour, c.num_colours};
}

VertexColouring stable_vertex_colouring(const Graph& g, Exec exec) {
    return vertex_colouring(wl_stable_k(g, 1, exec));
}

// ---------------------------------------------------------------------------
// Reference implementation: one ordered map from signature to id per round.
// std::map iterates keys in lexicographic order, so the assigned ids follow
// the same canonical order as the kernel.

namespace {

std::vector<int> reference_assign(const std::vector<std::vector<int>>& sigs, int& count) {
    std::map<std::vector<int>, int> dict;
    for (const auto& s : sigs) dict.emplace(s, 0);
    int id = 0;
    for (auto& [sig, val] : dict) val = id++;
    std::vector<int> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) out[i] = dict.at(sigs[i]);
    count = id;
    return out;
}

} // namespace

TupleColouring wl_stable_k_reference(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("wl: dimension must be at least 1");
    const int n = g.size();
    const long long per = tuples_per_graph(n, k);
    TupleColouring tc;
    tc.k = k;
    tc.n = n;
    if (n == 0) return tc;

    std::vector<std::vector<int>> tuples(per, std::vector<int>(k));
    for (long long t = 0; t < per; ++t) {
        long long rest = t;
        for (int i = k - 1; i >= 0; --i) {
            tuples[t][i] = int(rest % n);
            rest /= n;
        }
    }

    std::vector<std::vector<int>> sigs(per);
    if (k == 1) {
        for (int v = 0; v < n; ++v) sigs[v] = {g.colour(v)};
    } else {
        for (long long t = 0; t < per; ++t) {
            const auto& tu = tuples[t];
            std::vector<int> s;
            for (int i = 0; i < k; ++i) s.push_back(g.colour(tu[i]));
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < k; ++l) s.push_back(tu[i] == tu[l] ? 1 : 0);
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < k; ++l) s.push_back(g.adjacent(tu[i], tu[l]) ? 1 : 0);
            sigs[t] = std::move(s);
        }
    }
    tc.colour = reference_assign(sigs, tc.num_colours);

    while (true) {
        std::vector<std::vector<int>> next(per);
        for (long long t = 0; t < per; ++t) {
            const auto& tu = tuples[t];
            std::vector<int> s{tc.colour[t]};
            if (k == 1) {
                for (int w = 0; w < n; ++w)
                    if (g.adjacent(tu[0], w)) s.push_back(tc.colour[w]);
                std::sort(s.begin() + 1, s.end());
            } else {
                std::vector<std::vector<int>> chunks(n, std::vector<int>(k));
                for (int w = 0; w < n; ++w) {
                    std::vector<int> sub = tu;
                    for (int i = 0; i < k; ++i) {
                        sub[i] = w;
                        chunks[w][i] = tc.colour[tc.index_of(sub)];
                        sub[i] = tu[i];
                    }
                }
                std::sort(chunks.begin(), chunks.end());
                for (const auto& ch : chunks) s.insert(s.end(), ch.begin(), ch.end());
            }
            next[t] = std::move(s);
        }
        int count = 0;
        std::vector<int> ids = reference_assign(next, count);
        if (count == tc.num_colours) break;
        tc.colour = std::move(ids);
        tc.num_colours = count;
        ++tc.rounds;
    }
    return tc;
}

} // namespace rankwl
