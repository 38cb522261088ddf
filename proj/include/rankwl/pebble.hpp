#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rankwl/common.hpp"
#include "rankwl/graph.hpp"

namespace rankwl {

enum class Winner { Spoiler, Duplicator };

// Per-position record of a winning Spoiler option, for Spoiler verdicts.
// Immediately lost positions carry no move and are not listed.
struct SpoilerMove {
    enum class Kind { RemovePair, PlayNew };
    std::vector<std::pair<int, int>> position; // canonically sorted pair set
    Kind kind;
    int remove_index = -1; // position of the removed pair, for RemovePair
};

struct GameVerdict {
    Winner winner;
    std::vector<SpoilerMove> digest; // filled on request for Spoiler wins
};

// True iff the pebbled pair set is not a partial isomorphism: some pair
// mismatches colours, or two pairs disagree on equality or adjacency.
bool position_is_immediate_loss(const Graph& g, const Graph& h,
                                std::span<const std::pair<int, int>> pairs);

// Exact winner of the bijective pebble game with `pebbles` pebble pairs,
// from the empty position under optimal play. Positions are canonical pair
// sets; the safe set is the greatest fixpoint over Spoiler's options, with
// Duplicator's bijection step decided by a perfect-matching oracle on the
// safe extensions. Graphs of different order are an immediate Spoiler win.
// Guarded at n <= 8 and pebbles <= 4.
GameVerdict spoiler_wins(const Graph& g, const Graph& h, int pebbles,
                         Exec exec = Exec::Parallel, bool want_digest = false);

// Checks that k-WL distinguishes the graphs exactly when Spoiler wins the
// (k+1)-pebble game. Guarded at n <= 8, k <= 3.
bool verify_theorem_wl_game(const Graph& g, const Graph& h, int k, Exec exec = Exec::Parallel);

// Maximum bipartite matching (augmenting paths); adj is row-major
// left_size x right_size. Returns the matching size.
int maximum_bipartite_matching(std::span<const std::uint8_t> adj, int left_size, int right_size);

} // namespace rankwl
