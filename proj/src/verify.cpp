#include "rankwl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rankwl/canon.hpp"
#include "rankwl/cutrank.hpp"
#include "rankwl/decomposition.hpp"
#include "rankwl/pebble.hpp"
#include "rankwl/splitflip.hpp"
#include "rankwl/wl.hpp"

namespace rankwl {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed * 0x9e3779b97f4a7c15ull + splitmix64(stream + 1))) {}

std::uint64_t CounterRng::next() {
    return splitmix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_);
}

int CounterRng::below(int n) { return int(next() % std::uint64_t(n)); }

Graph random_graph(int n, CounterRng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<int> random_permutation(int n, CounterRng& rng) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(pi[i], pi[rng.below(i + 1)]);
    return pi;
}

VertexSet random_subset(int n, CounterRng& rng) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (rng.coin()) members.push_back(v);
    return VertexSet(std::move(members));
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(pi);
    while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

// Pair-bit index for the adjacency bit string, pairs (u,v) with u < v in
// lexicographic order.
struct PairIndex {
    int n;
    int idx[8][8];
    explicit PairIndex(int n_) : n(n_) {
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) idx[u][v] = idx[v][u] = b++;
    }
};

std::uint64_t graph_mask(const Graph& g, const PairIndex& pi) {
    std::uint64_t m = 0;
    for (auto [u, v] : g.edge_list()) m |= std::uint64_t(1) << pi.idx[u][v];
    return m;
}

std::uint64_t relabel_mask(std::uint64_t mask, const std::vector<int>& perm,
                           const PairIndex& pi) {
    std::uint64_t out = 0;
    for (int u = 0; u < pi.n; ++u)
        for (int v = u + 1; v < pi.n; ++v)
            if (mask >> pi.idx[u][v] & 1) out |= std::uint64_t(1) << pi.idx[perm[u]][perm[v]];
    return out;
}

Graph graph_from_mask(int n, std::uint64_t mask, const PairIndex& pi) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pi.idx[u][v] & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace

std::uint64_t min_perm_canonical_mask(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("min_perm_canonical_mask: n <= 8");
    if (!g.is_uncoloured())
        throw std::invalid_argument("min_perm_canonical_mask: uncoloured graphs only");
    PairIndex pi(n);
    std::uint64_t mask = graph_mask(g, pi);
    std::uint64_t best = mask;
    for (const auto& perm : all_permutations(n))
        best = std::min(best, relabel_mask(mask, perm, pi));
    return best;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("all_graphs_up_to_iso: 1 <= n <= 6");

    static std::mutex cache_mutex;
    static std::vector<std::vector<Graph>> cache(7);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (!cache[n].empty()) return cache[n];
    }

    PairIndex pi(n);
    const auto perms = all_permutations(n);
    const long long total = 1ll << (n * (n - 1) / 2);
    std::vector<std::uint8_t> canonical(total, 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (long long mask = 0; mask < total; ++mask) {
        bool is_canonical = true;
        for (const auto& perm : perms)
            if (relabel_mask(std::uint64_t(mask), perm, pi) < std::uint64_t(mask)) {
                is_canonical = false;
                break;
            }
        canonical[mask] = is_canonical;
    }
    std::vector<Graph> reps;
    for (long long mask = 0; mask < total; ++mask)
        if (canonical[mask]) reps.push_back(graph_from_mask(n, std::uint64_t(mask), pi));

    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache[n].empty()) cache[n] = reps;
    return reps;
}

std::vector<VertexSet> automorphism_orbits(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("automorphism_orbits: n <= 8");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& perm : all_permutations(n)) {
        bool aut = true;
        for (int v = 0; v < n && aut; ++v) {
            if (g.colour(perm[v]) != g.colour(v)) aut = false;
            for (int w = v + 1; w < n && aut; ++w)
                if (g.adjacent(v, w) != g.adjacent(perm[v], perm[w])) aut = false;
        }
        if (!aut) continue;
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(perm[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<int>> classes(n);
    for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& cls : classes)
        if (!cls.empty()) out.push_back(VertexSet(std::move(cls)));
    return out;
}

Graph prufer_tree(int n, std::span<const int> seq) {
    if (n < 2) throw std::invalid_argument("prufer_tree: n >= 2");
    if (int(seq.size()) != n - 2) throw std::invalid_argument("prufer_tree: sequence length");
    std::vector<int> deg(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("prufer_tree: entry out of range");
        ++deg[s];
    }
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        deg[leaf] = 0;
        --deg[s];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Expression fixtures.

namespace {

std::string complete_expr(int n) {
    std::string e = "(v 1)";
    for (int i = 1; i < n; ++i) e = "(rho 2 1 (eta 1 2 (u " + e + " (v 2))))";
    return e;
}

std::string path_expr(int n) {
    std::string e = "(v 2)";
    for (int i = 1; i < n; ++i) e = "(rho 3 2 (rho 2 1 (eta 2 3 (u " + e + " (v 3)))))";
    return e;
}

std::string cycle5_expr() {
    std::string e = "(eta 1 3 (u (v 1) (v 3)))";
    for (int i = 2; i < 5; ++i) e = "(rho 4 3 (rho 3 2 (eta 3 4 (u " + e + " (v 4)))))";
    return "(eta 1 3 " + e + ")";
}

} // namespace

const std::vector<ExpressionFixture>& expression_fixtures() {
    static const std::vector<ExpressionFixture> fixtures = {
        {"k3", complete_expr(3)},
        {"k6", complete_expr(6)},
        {"p4", path_expr(4)},
        {"p6", path_expr(6)},
        {"c5", cycle5_expr()},
        {"k23", "(eta 1 2 (u (u (v 1) (v 1)) (u (v 2) (u (v 2) (v 2)))))"},
        {"two-k3", "(u " + complete_expr(3) + " " + complete_expr(3) + ")"},
    };
    return fixtures;
}

// ---------------------------------------------------------------------------
// Acceptance suites.

namespace {

struct FailureLog {
    std::atomic<long long> count{0};
    std::mutex mutex;
    std::string first;

    void record(const std::string& what) {
        ++count;
        std::lock_guard<std::mutex> lock(mutex);
        if (first.empty()) first = what;
    }
};

std::string side_of(const VertexSet& comp, const VertexSet& x, int n) {
    // "" if the component fits one side of the cut, else a description
    bool in = true, out = true;
    for (int v : comp) (x.contains(v) ? out : in) = false;
    if (in || out) return {};
    std::ostringstream msg;
    msg << "component {";
    for (int v : comp) msg << v << ' ';
    msg << "} crosses the cut of size " << x.size() << "/" << n - x.size();
    return msg.str();
}

bool subset_of(std::span<const int> small, std::span<const int> big) {
    for (int v : small)
        if (std::find(big.begin(), big.end(), v) == big.end()) return false;
    return true;
}

std::vector<int> tuple_members_in(std::span<const int> tuple, const VertexSet& s) {
    std::vector<int> out;
    for (int v : tuple)
        if (s.contains(v)) out.push_back(v);
    return out;
}

std::vector<Graph> low_rank_width_reps(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_up_to_iso(n))
        if (rank_width_exact(g, Exec::Serial).width <= 1) out.push_back(g);
    return out;
}

SuiteResult suite_iso_oracle(std::uint64_t seed) {
    FailureLog log;
    auto reps = all_graphs_up_to_iso(5);
    if (reps.size() != 34) {
        SuiteResult r{"iso-oracle", false, "", 0};
        r.detail = "expected 34 isomorphism classes on 5 vertices, got " +
                   std::to_string(reps.size());
        return r;
    }
    std::vector<Graph> pool;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        pool.push_back(reps[c]);
        CounterRng rng(seed, 100 + c);
        for (int t = 0; t < 5; ++t)
            pool.push_back(apply_permutation(reps[c], random_permutation(5, rng)));
    }
    const int m = int(pool.size());
    std::vector<int> rw(m);
    std::vector<std::string> str(m);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) {
        rw[i] = rank_width_exact(pool[i], Exec::Serial).width;
        str[i] = canonical_string(canonise(pool[i], 2, Exec::Serial));
    }
    long long pairs = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : pairs)
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (rw[i] > 1 || rw[j] > 1) continue;
            ++pairs;
            const bool canon_eq = str[i] == str[j];
            const bool oracle = brute_force_isomorphic(pool[i], pool[j]).has_value();
            if (canon_eq != oracle)
                log.record("pool graphs " + std::to_string(i) + "," + std::to_string(j) +
                           ": iso_test=" + std::to_string(canon_eq) +
                           " oracle=" + std::to_string(oracle));
        }
    }
    SuiteResult r{"iso-oracle", log.count == 0, "", 0};
    r.detail = "34 classes, pool " + std::to_string(m) + ", " + std::to_string(pairs) +
               " low-width pairs, disagreements " + std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_wl_identifies(std::uint64_t) {
    FailureLog log;
    long long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto reps = all_graphs_up_to_iso(n);
        const int m = int(reps.size());
        std::vector<int> rw(m);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < m; ++i) rw[i] = rank_width_exact(reps[i], Exec::Serial).width;
        std::vector<std::pair<int, int>> jobs;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (rw[i] <= 1 || rw[j] <= 1) jobs.emplace_back(i, j);
        checked += (long long)jobs.size();
#pragma omp parallel for schedule(dynamic)
        for (long long t = 0; t < (long long)jobs.size(); ++t) {
            auto [i, j] = jobs[t];
            if (!wl_distinguishes(reps[i], reps[j], 2, Exec::Serial))
                log.record("n=" + std::to_string(n) + " classes " + std::to_string(i) + "," +
                           std::to_string(j) + " not distinguished at dimension 2");
        }
    }
    // Direct dimension-7 smoke runs on small non-isomorphic pairs whose
    // first graph has rank width 1.
    const std::pair<Graph, Graph> smoke[] = {
        {Graph::path(4), Graph::complete_bipartite(1, 3)},
        {Graph::path(5), Graph::cycle(5)},
        {Graph::complete(5), Graph::cycle(5)},
    };
    for (const auto& [a, b] : smoke)
        if (!wl_distinguishes(a, b, 7))
            log.record("dimension-7 smoke pair not distinguished");
    SuiteResult r{"wl-identifies", log.count == 0, "", 0};
    r.detail = std::to_string(checked) + " class pairs at dimension 2 plus 3 dimension-7 runs, " +
               "failures " + std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_wl_game(std::uint64_t seed) {
    FailureLog log;
    long long checked = 0;
    for (int n = 1; n <= 5; ++n) {
        auto reps = all_graphs_up_to_iso(n);
        const int m = int(reps.size());
        std::vector<std::pair<int, int>> jobs;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) jobs.emplace_back(i, j);
        checked += 2 * (long long)jobs.size();
#pragma omp parallel for schedule(dynamic)
        for (long long t = 0; t < (long long)jobs.size(); ++t) {
            auto [i, j] = jobs[t];
            for (int k = 1; k <= 2; ++k)
                if (!verify_theorem_wl_game(reps[i], reps[j], k, Exec::Serial))
                    log.record("n=" + std::to_string(n) + " classes " + std::to_string(i) + "," +
                               std::to_string(j) + " k=" + std::to_string(k));
        }
    }
    auto reps6 = all_graphs_up_to_iso(6);
    CounterRng rng(seed, 300);
    std::vector<std::pair<int, int>> sampled;
    for (int t = 0; t < 200; ++t)
        sampled.emplace_back(rng.below(int(reps6.size())), rng.below(int(reps6.size())));
    checked += 2 * (long long)sampled.size();
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < (long long)sampled.size(); ++t) {
        auto [i, j] = sampled[t];
        for (int k = 1; k <= 2; ++k)
            if (!verify_theorem_wl_game(reps6[i], reps6[j], k, Exec::Serial))
                log.record("sampled n=6 classes " + std::to_string(i) + "," + std::to_string(j) +
                           " k=" + std::to_string(k));
    }
    SuiteResult r{"wl-game", log.count == 0, "", 0};
    r.detail = std::to_string(checked) + " game/WL comparisons, failures " +
               std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_canonisation(std::uint64_t seed) {
    FailureLog log;
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : low_rank_width_reps(n)) corpus.push_back(g);
    {
        CounterRng rng(seed, 400);
        int want = 300;
        while (int(corpus.size()) < want) {
            int n = 1 + rng.below(7);
            corpus.push_back(random_graph(n, rng));
        }
    }
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)corpus.size(); ++i) {
        const Graph& g = corpus[i];
        CanonicalForm cf = canonise(g, 2, Exec::Serial);
        if (!brute_force_isomorphic(graph_of(cf), g).has_value()) {
            log.record("corpus graph " + std::to_string(i) + ": canonical form not isomorphic");
            continue;
        }
        const std::string want = canonical_string(cf);
        CounterRng rng(seed, 500 + std::uint64_t(i));
        for (int t = 0; t < 30; ++t) {
            Graph h = apply_permutation(g, random_permutation(g.size(), rng));
            if (canonical_string(canonise(h, 2, Exec::Serial)) != want) {
                log.record("corpus graph " + std::to_string(i) +
                           ": relabelled canonical string differs");
                break;
            }
        }
    }
    SuiteResult r{"canonisation", log.count == 0, "", 0};
    r.detail = std::to_string(corpus.size()) + " corpus graphs x 30 relabellings, failures " +
               std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_wl_monotone(std::uint64_t seed) {
    FailureLog log;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < 500; ++t) {
        CounterRng rng(seed, 600 + t);
        int n = 2 + rng.below(5);
        Graph g = random_graph(n, rng), h = random_graph(n, rng);
        for (int k = 1; k <= 2; ++k)
            if (wl_distinguishes(g, h, k, Exec::Serial) &&
                !wl_distinguishes(g, h, k + 1, Exec::Serial))
                log.record("pair " + std::to_string(t) + ": distinguished at k=" +
                           std::to_string(k) + " but not at k+1");
    }
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < 200; ++t) {
        CounterRng rng(seed, 800 + t);
        int n = 2 + rng.below(5);
        Graph g = random_graph(n, rng);
        auto pi = random_permutation(n, rng);
        Graph h = apply_permutation(g, pi);
        for (int k = 1; k <= 3; ++k) {
            TupleColouring a = wl_stable_k(g, k, Exec::Serial);
            TupleColouring b = wl_stable_k(h, k, Exec::Serial);
            if (a.num_colours != b.num_colours) {
                log.record("sample " + std::to_string(t) + " k=" + std::to_string(k) +
                           ": colour counts differ");
                continue;
            }
            std::vector<int> tup(k, 0), img(k, 0);
            const long long per = (long long)a.colour.size();
            for (long long idx = 0; idx < per; ++idx) {
                long long rest = idx;
                for (int i = k - 1; i >= 0; --i) {
                    tup[i] = int(rest % n);
                    rest /= n;
                }
                for (int i = 0; i < k; ++i) img[i] = pi[tup[i]];
                if (a.colour[idx] != b.id_of(img)) {
                    log.record("sample " + std::to_string(t) + " k=" + std::to_string(k) +
                               ": colour ids do not commute with the permutation");
                    break;
                }
            }
        }
    }
    SuiteResult r{"wl-monotone", log.count == 0, "", 0};
    r.detail = "500 monotonicity pairs, 200 invariance samples, failures " +
               std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_flip_components(std::uint64_t seed) {
    FailureLog log;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < 200; ++t) {
        CounterRng rng(seed, 1000 + t);
        int n = 1 + rng.below(9);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OrderedSplitPair sp = find_split_pair(g, x);

        FlipResult fr = find_flip_function(g, x, sp);
        for (const VertexSet& comp : components_flip(g, fr.colouring, fr.f)) {
            std::string bad = side_of(comp, x, n);
            if (!bad.empty()) {
                log.record("flip function instance " + std::to_string(t) + ": " + bad);
                break;
            }
        }

        FlipExtension s = find_flip_extension(g, x, sp);
        for (const VertexSet& comp : connected_components(flip_extension_graph(g, s))) {
            std::string bad = side_of(comp, x, n);
            if (!bad.empty()) {
                log.record("flip extension instance " + std::to_string(t) + ": " + bad);
                break;
            }
        }
    }
    SuiteResult r{"flip-components", log.count == 0, "", 0};
    r.detail = "200 instances, both constructions, failures " + std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_nice_pairs(std::uint64_t seed) {
    FailureLog log;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < 50; ++t) {
        CounterRng rng(seed, 1200 + t);
        int n = 2 + rng.below(7);
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        std::vector<int> m1, m2;
        for (int v : x) (rng.coin() ? m1 : m2).push_back(v);
        VertexSet x1{std::move(m1)}, x2{std::move(m2)};
        OrderedSplitPair sp = find_split_pair(g, x);
        auto [p1, p2] = nice_split_pairs(g, x, x1, x2, sp);
        try {
            check_split_pair(g, p1);
            check_split_pair(g, p2);
        } catch (const std::exception& e) {
            log.record("instance " + std::to_string(t) + ": " + e.what());
            continue;
        }
        VertexSet xbar = x.complement(n);
        bool ok = subset_of(tuple_members_in(sp.a, x1), p1.a) &&
                  subset_of(tuple_members_in(sp.a, x2), p2.a) &&
                  subset_of(tuple_members_in(p2.b, x1), p1.a) &&
                  subset_of(tuple_members_in(p1.b, x2), p2.a) &&
                  subset_of(tuple_members_in(p1.b, xbar), sp.b) &&
                  subset_of(tuple_members_in(p2.b, xbar), sp.b);
        if (!ok) log.record("instance " + std::to_string(t) + ": containment fails");
    }
    SuiteResult r{"nice-pairs", log.count == 0, "", 0};
    r.detail = "50 instances, failures " + std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_width_facts(std::uint64_t) {
    FailureLog log;
    for (int n = 2; n <= 8; ++n) {
        int w = rank_width_exact(Graph::complete(n)).width;
        if (w != 1)
            log.record("complete graph K_" + std::to_string(n) + " has width " +
                       std::to_string(w));
    }
    long long trees = 1; // the one-vertex tree has width 0
    if (rank_width_exact(Graph::edgeless(1)).width != 0) log.record("single vertex width != 0");
    for (int n = 2; n <= 8; ++n) {
        long long total = 1;
        for (int i = 0; i < n - 2; ++i) total *= n;
        trees += total;
#pragma omp parallel for schedule(dynamic, 64)
        for (long long code = 0; code < total; ++code) {
            std::vector<int> seq(n - 2);
            long long rest = code;
            for (int i = 0; i < n - 2; ++i) {
                seq[i] = int(rest % n);
                rest /= n;
            }
            Graph tree = prufer_tree(n, seq);
            int w = rank_width_exact(tree, Exec::Serial).width;
            if (w > 2)
                log.record("tree n=" + std::to_string(n) + " code=" + std::to_string(code) +
                           " has width " + std::to_string(w));
        }
    }
    for (const auto& fx : expression_fixtures()) {
        CliqueExpression e = parse_expression(fx.text);
        EvaluatedExpression ev = evaluate_expression(e);
        int w = rank_width_exact(ev.graph).width;
        if (w > e.label_count())
            log.record("expression " + fx.name + ": width " + std::to_string(w) + " > " +
                       std::to_string(e.label_count()) + " labels");
    }
    SuiteResult r{"width-facts", log.count == 0, "", 0};
    r.detail = "K_2..K_8, " + std::to_string(trees) + " labelled trees, " +
               std::to_string(expression_fixtures().size()) + " expressions, failures " +
               std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

SuiteResult suite_orbits(std::uint64_t) {
    FailureLog log;
    long long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto reps = low_rank_width_reps(n);
        checked += (long long)reps.size();
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)reps.size(); ++i) {
            auto wl = orbit_partition(reps[i], 2, Exec::Serial);
            auto truth = automorphism_orbits(reps[i]);
            if (wl != truth)
                log.record("n=" + std::to_string(n) + " class " + std::to_string(i) +
                           ": orbit partition differs from automorphism orbits");
        }
    }
    SuiteResult r{"orbits", log.count == 0, "", 0};
    r.detail = std::to_string(checked) + " low-width graphs, failures " +
               std::to_string(log.count.load());
    if (!log.first.empty()) r.detail += "; first: " + log.first;
    return r;
}

struct SuiteSpec {
    const char* name;
    SuiteResult (*run)(std::uint64_t);
    double time_cap_seconds; // 0 = uncapped
};

const SuiteSpec kSuites[] = {
    {"iso-oracle", suite_iso_oracle, 60.0},
    {"wl-identifies", suite_wl_identifies, 600.0},
    {"wl-game", suite_wl_game, 600.0},
    {"canonisation", suite_canonisation, 300.0},
    {"wl-monotone", suite_wl_monotone, 0.0},
    {"flip-components", suite_flip_components, 120.0},
    {"nice-pairs", suite_nice_pairs, 0.0},
    {"width-facts", suite_width_facts, 120.0},
    {"orbits", suite_orbits, 0.0},
};

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : kSuites) out.push_back(s.name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& spec : kSuites) {
        if (name != spec.name) continue;
        auto start = std::chrono::steady_clock::now();
        SuiteResult r = spec.run(seed);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (spec.time_cap_seconds > 0 && r.seconds > spec.time_cap_seconds) {
            r.pass = false;
            r.detail += "; exceeded time cap of " + std::to_string(int(spec.time_cap_seconds)) +
                        "s";
        }
        return r;
    }
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

} // namespace rankwl
