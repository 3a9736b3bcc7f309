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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "engine.hpp"

namespace cheatbot::solver {

using engine::BodyguardOptions;
using engine::Game;
using engine::Ruleset;
using graphcore::Graph;

struct SolveOptions {
    int threads = 1;
    uint64_t transition_budget = 200'000'000;  // estimated (config, move) pairs per sweep
    bool decide_only = true;                   // stop at the first winning placement
};

struct SolveStats {
    uint64_t configs = 0;
    uint64_t states = 0;
    uint64_t transitions = 0;  // accumulated (config, move) visits
    uint64_t rounds = 0;
    double wall_ms = 0;
};

/**
 * Winner table over canonical cop configurations: row = multiset rank,
 * bit r set = the evader wins from the cop-turn position (row, r).
 * The table is the greatest fixed point of the per-game survival operator,
 * so it is identical for any sweep order and any thread count.
 */
struct WinnerTable {
    int n = 0;
    int k = 0;
    Game game = Game::cheating_robot;
    std::vector<Mask128> rows;
    uint64_t hash() const;
};

struct SolveResult {
    bool cop_win = false;
    std::vector<int> winning_placement;  // set when cop_win
    SolveStats stats;
    std::shared_ptr<WinnerTable> table;  // null when the solve exited early
};

/**
 * Exact solve of one game at a fixed cop count. Rejects disconnected graphs.
 * For the pursuit games the table is the evader-winning region (least-fixed-
 * point cop attractor complement); for the bodyguard game the winner combines
 * a maintenance greatest fixed point with its attractor.
 */
SolveResult solve(const Graph& g, int k, const Ruleset& rules, const SolveOptions& opts = {});

// ---- graph parameters -------------------------------------------------------

struct ValueResult {
    int value = 0;
    std::vector<int> placement;  // winning initial cop placement
    SolveStats stats;            // accumulated over the search
};

/// Smallest k winning the cheating-robot game; search starts at the degeneracy.
ValueResult cheating_robot_number(const Graph& g, const SolveOptions& opts = {});

/// Smallest k winning the surrounding game; search starts at the minimum degree.
ValueResult surrounding_number(const Graph& g, const SolveOptions& opts = {});

/// Smallest guard count winning the bodyguard game under the given options.
ValueResult bodyguard_number(const Graph& g, const BodyguardOptions& bg, const SolveOptions& opts = {});

/**
 * Push number: smallest budget p such that cheating_robot_number(g) cops win
 * while at most p distinct cops ever move onto a surviving robber. Pass the
 * precomputed cop count when available to skip recomputing it.
 */
ValueResult push_number(const Graph& g, const SolveOptions& opts = {}, std::optional<int> known_ccr = std::nullopt);

/// Budgeted decision: do k cops win with at most p distinct pushers?
SolveResult solve_push_budget(const Graph& g, int k, int p, const SolveOptions& opts = {});

struct ParameterReport {
    uint64_t graph_hash = 0;
    int n = 0;
    long long m = 0;
    int degeneracy = 0;
    std::optional<int> ccr, sigma, bodyguard, push;
    std::vector<int> ccr_placement, sigma_placement, bodyguard_placement, push_placement;
    double ccr_ms = 0, sigma_ms = 0, bodyguard_ms = 0, push_ms = 0;
};

// ---- traces -------------------------------------------------------------------

struct TraceRound {
    engine::MoveEvent cop_move;
    int robber_from = -1;
    int robber_to = -1;  // -1 = no legal response (captured)
};

struct Trace {
    std::vector<int> initial_cops;
    int initial_robber = -1;
    std::vector<TraceRound> rounds;
    bool captured = false;
    int distinct_pushers = 0;
};

/**
 * Optimal-play trace from a solved table: cops minimize the distance-to-capture
 * rank, the robber maximizes it (ties broken toward the lowest vertex), so
 * traces are deterministic. The start must be a cop-winning position.
 */
Trace best_play_trace(const Graph& g, const Ruleset& rules, const WinnerTable& table,
                      const std::vector<int>& cops, int robber);

/**
 * The explicit two-cop pincer on the cycle C_n: cop 1 walks down the index
 * order, cop 2 walks up, each stalling on the robber's doorstep, and the
 * endgame move captures without a push. `verify_all_starts` simulates every
 * robber placement and strategy.
 */
Trace scripted_cycle_trace(int n, int robber_start);
bool scripted_cycle_verify(int n, int round_cap, std::string* why = nullptr);

}  // namespace cheatbot::solver
