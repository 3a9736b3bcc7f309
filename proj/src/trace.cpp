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
#include <algorithm>
#include <limits>
#include <map>

#include "error.hpp"
#include "solver.hpp"

namespace cheatbot::solver {

using engine::MoveEvent;
using engine::MultisetIndexer;

namespace {

constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();

/**
 * Distance-to-capture layers over the cop-winning region of a solved table,
 * computed at MoveEvent granularity (fine for trace-scale graphs). Layer 1 =
 * capture on this cop move; otherwise 1 + the worst evader response.
 */
class Layers {
public:
    Layers(const Graph& g, const Ruleset& rules, const WinnerTable& table)
        : g_(g), rules_(rules), table_(table), idx_(table.n, table.k) {
        layers_.assign(table.rows.size() * static_cast<size_t>(table.n), kInf);
        bool any = true;
        while (any) {
            any = false;
            for (uint64_t row = 0; row < table.rows.size(); ++row) {
                std::vector<int> cops = idx_.unrank(row);
                for (int r = 0; r < table.n; ++r) {
                    if (!is_cop_turn_state(cops, r) || table.rows[row].test(r)) continue;
                    uint32_t best = at(row, r);
                    for (const MoveEvent& e : engine::cop_moves({cops, r}, g_)) {
                        uint32_t v = move_value(e, r);
                        if (v < best) best = v;
                    }
                    if (best < at(row, r)) {
                        layers_[row * table.n + r] = best;
                        any = true;
                    }
                }
            }
        }
    }

    uint32_t at(uint64_t row, int r) const { return layers_[row * table_.n + r]; }

    bool is_cop_turn_state(const std::vector<int>& cops, int r) const {
        return std::find(cops.begin(), cops.end(), r) == cops.end();
    }

    /// Value of playing event e against the evader at r: kInf if the evader escapes.
    uint32_t move_value(const MoveEvent& e, int r) const {
        uint64_t dst = idx_.rank(e.dest);
        bool surround_capture = rules_.game == Game::surrounding && engine::surround_holds(e.dest, r, g_);
        std::vector<int> resp = surround_capture
                                    ? std::vector<int>{}
                                    : engine::robber_responses({e.dest, r, e.forbidden}, g_, rules_);
        if (resp.empty()) return 1;
        uint32_t worst = 0;
        for (int r2 : resp) {
            if (table_.rows[dst].test(r2)) return kInf;  // the evader slips back into the winning region
            worst = std::max(worst, at(dst, r2));
        }
        return worst == kInf ? kInf : worst + 1;
    }

    const MultisetIndexer& indexer() const { return idx_; }

private:
    const Graph& g_;
    Ruleset rules_;
    const WinnerTable& table_;
    MultisetIndexer idx_;
    std::vector<uint32_t> layers_;
};

}  // namespace

Trace best_play_trace(const Graph& g, const Ruleset& rules, const WinnerTable& table,
                      const std::vector<int>& cops_in, int robber) {
    if (rules.game == Game::bodyguard) fail_parameter("traces cover the two pursuit games");
    if (table.n != g.vertex_count()) fail_input("table does not match the graph");
    std::vector<int> cops = engine::canonicalize(cops_in);
    if (static_cast<int>(cops.size()) != table.k) fail_input("cop count does not match the table");
    if (robber < 0 || robber >= g.vertex_count() ||
        std::find(cops.begin(), cops.end(), robber) != cops.end())
        fail_input("illegal start position");

    Layers layers(g, rules, table);
    const MultisetIndexer& idx = layers.indexer();
    if (table.rows[idx.rank(cops)].test(robber)) fail_input("start position is not cop-winning; no capture trace exists");

    Trace tr;
    tr.initial_cops = cops;
    tr.initial_robber = robber;
    // (vertex, pushed) per cop slot; flags make the distinct-pusher count exact
    std::vector<std::pair<int, bool>> slots;
    for (int c : cops) slots.emplace_back(c, false);

    int r = robber;
    uint64_t guard = table.rows.size() * static_cast<uint64_t>(table.n) + 2;
    while (guard--) {
        uint64_t row = idx.rank(cops);
        MoveEvent best;
        uint32_t best_v = kInf;
        for (const MoveEvent& e : engine::cop_moves({cops, r}, g)) {
            uint32_t v = layers.move_value(e, r);
            if (v < best_v) {
                best_v = v;
                best = e;
            }
        }
        if (best_v == kInf) throw Error(ErrorKind::internal, "policy move missing inside the winning region");

        bool surround_capture = rules.game == Game::surrounding && engine::surround_holds(best.dest, r, g);
        std::vector<int> resp = surround_capture
                                    ? std::vector<int>{}
                                    : engine::robber_responses({best.dest, r, best.forbidden}, g, rules);

        // re-slot the cops along the event; pushing steps go to already-flagged
        // slots first so the recorded distinct-pusher count is the cops' minimum
        std::vector<std::pair<int, bool>> next;
        std::vector<bool> used(slots.size(), false);
        auto take = [&](int from, bool prefer_flagged) -> int {
            int pick = -1;
            for (size_t i = 0; i < slots.size(); ++i) {
                if (used[i] || slots[i].first != from) continue;
                if (slots[i].second == prefer_flagged) return static_cast<int>(i);
                if (pick < 0) pick = static_cast<int>(i);
            }
            return pick;
        };
        bool pushes = !resp.empty();
        for (auto [from, to] : best.traversed) {
            if (to != r) continue;
            int i = take(from, true);
            used[i] = true;
            next.emplace_back(to, slots[i].second || pushes);
        }
        for (auto [from, to] : best.traversed) {
            if (to == r) continue;
            int i = take(from, false);
            used[i] = true;
            next.emplace_back(to, slots[i].second);
        }
        std::sort(next.begin(), next.end());
        slots = std::move(next);
        cops = best.dest;

        TraceRound round;
        round.cop_move = best;
        round.robber_from = r;
        if (resp.empty()) {
            round.robber_to = -1;
            tr.rounds.push_back(std::move(round));
            tr.captured = true;
            break;
        }
        uint64_t dst = idx.rank(cops);
        int pick = resp[0];
        uint32_t pick_v = layers.at(dst, resp[0]);
        for (int r2 : resp) {
            uint32_t v = layers.at(dst, r2);
            if (v > pick_v) {
                pick_v = v;
                pick = r2;
            }
        }
        round.robber_to = pick;
        tr.rounds.push_back(std::move(round));
        r = pick;
    }
    for (auto& [v, f] : slots)
        if (f) ++tr.distinct_pushers;
    return tr;
}

// ---- the scripted two-cop pincer on a cycle -----------------------------------

namespace {

struct CycleScript {
    int n;
    int dec(int v) const { return (v + n - 1) % n; }
    int inc(int v) const { return (v + 1) % n; }

    // c1 walks down the index order, c2 walks up, both stalling on the
    // evader's doorstep; once both doorsteps are held, c1 steps on.
    std::pair<int, int> move(int c1, int c2, int r) const {
        if (c1 == inc(r) && c2 == dec(r)) return {r, c2};
        int n1 = (dec(c1) == r) ? c1 : dec(c1);
        int n2 = (inc(c2) == r) ? c2 : inc(c2);
        return {n1, n2};
    }
};

// Longest survival (and any push) for the evader against the script, over all
// of его strategies; memoized on (c1, c2, r).
struct CycleSim {
    const Graph& g;
    CycleScript script;
    int cap;
    std::map<std::tuple<int, int, int>, std::pair<int, bool>> memo;  // -> (rounds to capture, pushed?)
    bool overflow = false;

    std::pair<int, bool> run(int c1, int c2, int r, int depth) {
        if (depth > cap) {
            overflow = true;
            return {depth, false};
        }
        auto key = std::make_tuple(c1, c2, r);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        memo[key] = {cap + 1, false};  // cycle guard; revisits count as escape
        auto [d1, d2] = script.move(c1, c2, r);
        std::vector<int> forb;
        if (d1 == r) forb.push_back(c1);
        if (d2 == r) forb.push_back(c2);
        engine::RobberTurnState s{engine::canonicalize({d1, d2}), r, forb};
        auto resp = engine::robber_responses(s, g, {engine::Game::cheating_robot, {}});
        std::pair<int, bool> out;
        if (resp.empty()) {
            out = {1, false};
        } else {
            bool pushed_now = d1 == r || d2 == r;  // evader survived, so this was a push
            out = {0, false};
            for (int r2 : resp) {
                auto sub = run(d1, d2, r2, depth + 1);
                out.first = std::max(out.first, sub.first + 1);
                out.second = out.second || sub.second;
            }
            out.second = out.second || pushed_now;
        }
        memo[key] = out;
        return out;
    }
};

}  // namespace

bool scripted_cycle_verify(int n, int round_cap, std::string* why) {
    if (n < 3) fail_parameter("cycle strategy requires n >= 3");
    Graph g = graphcore::cycle(n);
    for (int r = 0; r < n; ++r) {
        if (r == 0 || r == 1) continue;  // cop start vertices
        CycleSim sim{g, {n}, round_cap, {}, false};
        auto [rounds, pushed] = sim.run(0, 1, r, 1);
        if (sim.overflow || rounds > round_cap) {
            if (why) *why = "evader at " + std::to_string(r) + " survives past " + std::to_string(round_cap) + " rounds";
            return false;
        }
        if (pushed) {
            if (why) *why = "a push occurred against evader start " + std::to_string(r);
            return false;
        }
    }
    return true;
}

Trace scripted_cycle_trace(int n, int robber_start) {
    if (n < 3) fail_parameter("cycle strategy requires n >= 3");
    if (robber_start <= 1 || robber_start >= n) fail_input("evader must start off the cops (vertices 0 and 1)");
    Graph g = graphcore::cycle(n);
    CycleScript script{n};
    CycleSim sim{g, script, 2 * n + 2, {}, false};

    Trace tr;
    tr.initial_cops = {0, 1};
    tr.initial_robber = robber_start;
    int c1 = 0, c2 = 1, r = robber_start;
    for (int round = 0; round < 2 * n + 2; ++round) {
        auto [d1, d2] = script.move(c1, c2, r);
        MoveEvent e;
        e.dest = engine::canonicalize({d1, d2});
        e.traversed = {{c1, d1}, {c2, d2}};
        std::sort(e.traversed.begin(), e.traversed.end());
        if (d1 == r) {
            e.forbidden.push_back(c1);
            ++e.pusher_count;
        }
        if (d2 == r) {
            e.forbidden.push_back(c2);
            ++e.pusher_count;
        }
        std::sort(e.forbidden.begin(), e.forbidden.end());
        auto resp = engine::robber_responses({e.dest, r, e.forbidden}, g, {engine::Game::cheating_robot, {}});
        TraceRound round_rec;
        round_rec.cop_move = e;
        round_rec.robber_from = r;
        if (resp.empty()) {
            round_rec.robber_to = -1;
            tr.rounds.push_back(std::move(round_rec));
            tr.captured = true;
            break;
        }
        // worst-case evader: maximize survival via the memoized simulation
        int pick = resp[0];
        int pick_v = -1;
        for (int r2 : resp) {
            int v = sim.run(d1, d2, r2, 1).first;
            if (v > pick_v) {
                pick_v = v;
                pick = r2;
            }
        }
        round_rec.robber_to = pick;
        tr.rounds.push_back(std::move(round_rec));
        c1 = d1;
        c2 = d2;
        r = pick;
    }
    return tr;
}

}  // namespace cheatbot::solver
