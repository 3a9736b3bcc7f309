/*
 * Copyright 2025-2026 the cheatbot authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bitmask.hpp"
#include "graph.hpp"

namespace cheatbot::engine {

using graphcore::Graph;

// Solvers keep vertex sets in two 64-bit words.
constexpr int kMaxArenaVertices = 128;
constexpr int kMaxCops = 12;

enum class Game { cheating_robot, surrounding, bodyguard };

struct BodyguardOptions {
    bool president_colocation = true;  // president may share a vertex with a guard
    bool guards_move_first = true;     // guards take the first turn after placement
    bool operator==(const BodyguardOptions&) const = default;
};

struct Ruleset {
    Game game = Game::cheating_robot;
    BodyguardOptions bodyguard;  // consulted only when game == bodyguard
};

/** Cop-turn position: canonical (sorted) cop multiset plus the evader vertex. */
struct CopTurnState {
    std::vector<int> cops;
    int robber = -1;
};

/** Robber-turn position. `forbidden` holds the origins of cops that just moved
 *  onto the robber's vertex; those edges may not be re-traversed. */
struct RobberTurnState {
    std::vector<int> cops;
    int robber = -1;
    std::vector<int> forbidden;
};

/** One collective cop move, quotiented by the multiset canonicalization. */
struct MoveEvent {
    std::vector<int> dest;                          // sorted destination multiset
    std::vector<std::pair<int, int>> traversed;     // per-cop (from,to), sorted
    std::vector<int> forbidden;                     // origins of cops landing on the robber
    int pusher_count = 0;                           // cop slots ending on the robber's vertex
};

std::vector<int> canonicalize(std::vector<int> cops);

/**
 * All collective cop moves from `s`: every cop steps within its closed
 * neighborhood. Two raw moves are reported once when they agree on the
 * canonical successor, the forbidden set they induce, and the pusher count.
 */
std::vector<MoveEvent> cop_moves(const CopTurnState& s, const Graph& g);

/** Legal evader responses under the given rules (occupancy and traversal
 *  legality only; no look-ahead). An empty result means capture for the
 *  pursuit games. For the bodyguard president an empty set never occurs:
 *  a fully blocked president stays put. */
std::vector<int> robber_responses(const RobberTurnState& s, const Graph& g, const Ruleset& rules);

/// True iff every neighbor of v is cop-occupied (occupancy, not multiplicity).
bool surround_holds(const std::vector<int>& cops, int v, const Graph& g);

struct InitialPlacement {
    std::vector<int> cops;       // canonical multiset
    std::vector<int> robbers;    // legal evader placements; empty = immediate cop win
};

/// All canonical cop placements of size k with the evader options for each.
std::vector<InitialPlacement> initial_states(const Graph& g, int k, const Ruleset& rules);

// ---------------------------------------------------------------------------
// Dense machinery shared by the solvers.
// ---------------------------------------------------------------------------

/** Colex ranking of sorted k-multisets over 0..n-1. */
class MultisetIndexer {
public:
    MultisetIndexer(int n, int k);
    uint64_t count() const { return count_; }
    uint64_t rank(const std::vector<int>& sorted) const;
    uint64_t rank(const int* sorted, int k) const;
    std::vector<int> unrank(uint64_t id) const;
    int n() const { return n_; }
    int k() const { return k_; }

private:
    int n_, k_;
    uint64_t count_;
    std::vector<std::vector<uint64_t>> choose_;  // choose_[a][b] = C(a, b), saturating
};

/** Per-graph bitmask views used by the fixed-point solvers. */
struct Arena {
    explicit Arena(const Graph& g);
    const Graph* g;
    int n;
    Mask128 all;
    std::vector<Mask128> open;    // N(v)
    std::vector<Mask128> closed;  // N[v]
};

/**
 * Enumerates, for a fixed cop multiset, every reachable destination multiset
 * exactly once. A destination multiset is reachable when a perfect matching
 * sends each cop token to a chosen destination inside its closed
 * neighborhood. The callback receives the sorted destinations and their
 * occupancy mask. `banned` (if >= 0) is excluded from every destination set.
 */
class DestEnumerator {
public:
    explicit DestEnumerator(const Arena& arena) : arena_(arena) {}
    DestEnumerator(const Arena& arena, const std::vector<int>& origins, int banned = -1)
        : arena_(arena) {
        reset(origins.data(), static_cast<int>(origins.size()), banned);
    }

    /// Re-targets the enumerator; origins need not be sorted.
    void reset(const int* origins, int k, int banned = -1);

    /// cb(dest_sorted, dest_count, occ_mask) -> bool; return false to abort.
    bool enumerate(const std::function<bool(const int*, int, Mask128)>& cb);

    /** Can the cops move to exactly this destination multiset while, for every
     *  vertex in `block`, sending at least one cop from that vertex onto `target`?
     *  Used to decide whether the blocked escape set is enforceable. */
    bool can_force(const int* dest_sorted, int k, int target, Mask128 block) const;

private:
    bool augment(int slot, int dest, std::vector<int>& seen, int stamp);
    bool feasible_counts(std::vector<int> avail_tokens, std::vector<int> need) const;

    const Arena& arena_;
    std::vector<int> tokens_;        // origin per token, sorted
    int banned_ = -1;
    std::vector<int> cand_;          // sorted candidate destinations
    std::vector<Mask128> tok_cand_;  // per token: reachable destinations as a vertex mask
    std::vector<int> tok_max_;       // per token: highest reachable candidate index
    // matching scratch
    std::vector<int> slot_dest_;
    std::vector<int> tok_slot_;      // token -> slot or -1
    std::vector<int> slot_tok_;
    std::vector<int> seen_;
    std::vector<std::vector<int>> snap_ts_, snap_st_;
    std::vector<int> dests_;
    std::vector<int8_t> occ_count_;
    int stamp_ = 0;
};

/** One-move capture set for the cheating-robot rules: the evader positions r
 *  (off the given cops) from which some collective cop move leaves no legal
 *  response. */
Mask128 one_move_capture_set(const Arena& arena, const std::vector<int>& cops);

}  // namespace cheatbot::engine
