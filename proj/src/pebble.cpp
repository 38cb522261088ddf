#include "rankwl/pebble.hpp"

#include <algorithm>
#include <unordered_map>

#include "rankwl/wl.hpp"

namespace rankwl {

bool position_is_immediate_loss(const Graph& g, const Graph& h,
                                std::span<const std::pair<int, int>> pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [v, w] = pairs[i];
        if (g.colour(v) != h.colour(w)) return true;
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [v2, w2] = pairs[j];
            if ((v == v2) != (w == w2)) return true;
            if (g.adjacent(v, v2) != h.adjacent(w, w2)) return true;
        }
    }
    return false;
}

int maximum_bipartite_matching(std::span<const std::uint8_t> adj, int left_size, int right_size) {
    std::vector<int> match_right(right_size, -1);
    std::vector<std::uint8_t> visited(right_size);
    auto augment = [&](auto&& self, int v) -> bool {
        for (int w = 0; w < right_size; ++w) {
            if (!adj[std::size_t(v) * right_size + w] || visited[w]) continue;
            visited[w] = 1;
            if (match_right[w] < 0 || self(self, match_right[w])) {
                match_right[w] = v;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int v = 0; v < left_size; ++v) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(augment, v)) ++size;
    }
    return size;
}

namespace {

// Positions are sorted sets of pair codes v*n + w, packed 7 bits per code
// (offset by one so zero never collides with an empty slot).
using Key = std::uint64_t;

Key make_key(std::span<const int> codes) {
    Key key = 0;
    for (std::size_t i = 0; i < codes.size(); ++i)
        key |= Key(codes[i] + 1) << (7 * i);
    return key;
}

struct Position {
    Key key;
    std::uint8_t size;
    std::uint8_t codes[4];
};

struct GameTable {
    int n = 0;
    int pebbles = 0;
    std::vector<Position> positions;
    std::unordered_map<Key, int> index;
    std::vector<std::uint8_t> alive;

    int find(std::span<const int> codes) const {
        auto it = index.find(make_key(codes));
        return it == index.end() ? -1 : it->second;
    }
};

void enumerate_positions(const Graph& g, const Graph& h, GameTable& table,
                         std::vector<int>& codes, int next_code) {
    if (!codes.empty()) {
        std::vector<std::pair<int, int>> pairs;
        for (int c : codes) pairs.emplace_back(c / table.n, c % table.n);
        if (position_is_immediate_loss(g, h, pairs)) return;
    }
    Position p;
    p.key = make_key(codes);
    p.size = std::uint8_t(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) p.codes[i] = std::uint8_t(codes[i]);
    table.index.emplace(p.key, int(table.positions.size()));
    table.positions.push_back(p);
    if (int(codes.size()) == table.pebbles) return;
    for (int c = next_code; c < table.n * table.n; ++c) {
        codes.push_back(c);
        enumerate_positions(g, h, table, codes, c + 1);
        codes.pop_back();
    }
}

// Safe-set membership check for one position against the current alive set.
// A position survives iff every single-removal successor is alive and, when
// a pebble pair is still free, some bijection keeps every extension alive.
bool survives(const GameTable& table, const Position& p) {
    const int n = table.n;
    std::vector<int> codes(p.codes, p.codes + p.size);

    for (int i = 0; i < p.size; ++i) {
        std::vector<int> rest = codes;
        rest.erase(rest.begin() + i);
        int idx = table.find(rest);
        if (idx < 0 || !table.alive[idx]) return false;
    }

    if (p.size < table.pebbles) {
        std::vector<std::uint8_t> adj(std::size_t(n) * n, 0);
        std::vector<int> ext;
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                int code = v * n + w;
                ext = codes;
                auto at = std::lower_bound(ext.begin(), ext.end(), code);
                if (at == ext.end() || *at != code) ext.insert(at, code);
                int idx = table.find(ext);
                if (idx >= 0 && table.alive[idx]) adj[std::size_t(v) * n + w] = 1;
            }
        if (maximum_bipartite_matching(adj, n, n) < n) return false;
    }
    return true;
}

} // namespace

GameVerdict spoiler_wins(const Graph& g, const Graph& h, int pebbles, Exec exec,
                         bool want_digest) {
    if (pebbles < 1 || pebbles > 4)
        throw guard_error("spoiler_wins: pebble count guarded at 1..4");
    if (g.size() != h.size()) return GameVerdict{Winner::Spoiler, {}};
    if (g.size() > 8) throw guard_error("spoiler_wins: guarded at n <= 8");
    if (g.size() == 0) return GameVerdict{Winner::Duplicator, {}};

    GameTable table;
    table.n = g.size();
    table.pebbles = pebbles;
    std::vector<int> codes;
    enumerate_positions(g, h, table, codes, 0);
    table.alive.assign(table.positions.size(), 1);

    const long long count = (long long)table.positions.size();
    if (exec == Exec::Parallel) {
        // Jacobi sweeps with a barrier per round: deletions are computed
        // against the previous round's safe set, so the fixpoint is reached
        // independently of iteration order.
        std::vector<std::uint8_t> next_alive(table.positions.size());
        bool changed = true;
        while (changed) {
            changed = false;
#pragma omp parallel for schedule(dynamic, 256) reduction(|| : changed)
            for (long long i = 0; i < count; ++i) {
                bool keep = table.alive[i] && survives(table, table.positions[i]);
                next_alive[i] = keep;
                if (keep != bool(table.alive[i])) changed = true;
            }
            std::swap(table.alive, next_alive);
        }
    } else {
        // Worklist reference: deletion is monotone, so eager propagation
        // reaches the same greatest fixpoint as the sweeps above.
        std::vector<int> queue;
        std::vector<std::uint8_t> queued(table.positions.size(), 1);
        for (long long i = count - 1; i >= 0; --i) queue.push_back(int(i));
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            queued[i] = 0;
            if (!table.alive[i] || survives(table, table.positions[i])) continue;
            table.alive[i] = 0;
            // Re-examine neighbours in the position lattice: one pair less
            // (their bijection step loses an option) or one pair more
            // (their removal closure breaks).
            const Position& p = table.positions[i];
            std::vector<int> pc(p.codes, p.codes + p.size);
            auto push = [&](int idx) {
                if (idx >= 0 && table.alive[idx] && !queued[idx]) {
                    queued[idx] = 1;
                    queue.push_back(idx);
                }
            };
            for (int c = 0; c < p.size; ++c) {
                std::vector<int> rest = pc;
                rest.erase(rest.begin() + c);
                push(table.find(rest));
            }
            if (p.size < table.pebbles) {
                for (int code = 0; code < table.n * table.n; ++code) {
                    std::vector<int> ext = pc;
                    auto at = std::lower_bound(ext.begin(), ext.end(), code);
                    if (at != ext.end() && *at == code) continue;
                    ext.insert(at, code);
                    push(table.find(ext));
                }
            }
        }
    }

    GameVerdict verdict;
    verdict.winner = table.alive[0] ? Winner::Duplicator : Winner::Spoiler;
    if (want_digest && verdict.winner == Winner::Spoiler) {
        for (long long i = 0; i < count; ++i) {
            if (table.alive[i]) continue;
            const Position& p = table.positions[i];
            SpoilerMove move;
            for (int c = 0; c < p.size; ++c)
                move.position.emplace_back(p.codes[c] / table.n, p.codes[c] % table.n);
            move.kind = SpoilerMove::Kind::PlayNew;
            std::vector<int> pc(p.codes, p.codes + p.size);
            for (int c = 0; c < p.size; ++c) {
                std::vector<int> rest = pc;
                rest.erase(rest.begin() + c);
                int idx = table.find(rest);
                if (idx < 0 || !table.alive[idx]) {
                    move.kind = SpoilerMove::Kind::RemovePair;
                    move.remove_index = c;
                    break;
                }
            }
            verdict.digest.push_back(std::move(move));
        }
    }
    return verdict;
}

bool verify_theorem_wl_game(const Graph& g, const Graph& h, int k, Exec exec) {
    if (g.size() > 8 || h.size() > 8 || k < 1 || k > 3)
        throw guard_error("verify_theorem_wl_game: guarded at n <= 8, k <= 3");
    const bool wl = wl_distinguishes(g, h, k, exec);
    const bool game = spoiler_wins(g, h, k + 1, exec).winner == Winner::Spoiler;
    return wl == game;
}

} // namespace rankwl
