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
#include <chrono>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "error.hpp"
#include "solver.hpp"

namespace cheatbot::solver {

using engine::Arena;

namespace {

using clk = std::chrono::steady_clock;

// Cop token in the budgeted game: vertex plus a sticky "has pushed" flag.
struct Token {
    uint8_t v;
    uint8_t flag;
};

uint64_t pack(const Token* toks, int k) {
    uint64_t key = 0;
    for (int i = 0; i < k; ++i) key = key << 8 | (static_cast<uint64_t>(toks[i].v) << 1 | toks[i].flag);
    return key;
}

/**
 * Budgeted cheating-robot game over flag-augmented configurations. A cop
 * landing on the evader either captures (no legal response: always allowed)
 * or pushes: the landing cops become flagged and the move is illegal whenever
 * the distinct flagged count would exceed the budget. Flags are part of the
 * canonical multiset, so cop identity beyond "has pushed" is quotiented out.
 */
class PushCore {
public:
    PushCore(const Graph& g, int k, int budget, const SolveOptions& opts)
        : arena_(g), n_(g.vertex_count()), k_(k), budget_(budget) {
        if (k > 8) fail_budget("push solver supports at most 8 cops");
        // all sorted token multisets with at most `budget` flags
        std::vector<Token> cur(k);
        std::function<void(int, int, int)> gen = [&](int i, int mincode, int flags) {
            if (i == k) {
                add_row(cur);
                return;
            }
            for (int code = mincode; code < 2 * n_; ++code) {
                int flag = code & 1;
                if (flags + flag > budget_) continue;
                cur[i] = {static_cast<uint8_t>(code >> 1), static_cast<uint8_t>(flag)};
                gen(i + 1, code, flags + flag);
            }
        };
        gen(0, 0, 0);
        double raw = 1;  // worst-case raw move tuples per row
        for (int v = 0; v < n_; ++v) raw = std::max(raw, static_cast<double>(g.degree(v) + 1));
        double est = static_cast<double>(rows_.size() / static_cast<size_t>(k)) * std::pow(raw, k);
        if (est > static_cast<double>(opts.transition_budget))
            fail_budget("push state space estimate " + std::to_string(static_cast<long long>(est)) + " exceeds budget");
    }

    SolveResult run(bool decide_only) {
        auto t0 = clk::now();
        SolveResult res;
        size_t nrows = z_.size();
        res.stats.configs = nrows;
        res.stats.states = nrows * static_cast<uint64_t>(n_);

        // flags never clear, so the flag-count layers form a DAG: fix the
        // highest layer first, then sweep each lower layer to its own fixpoint
        std::vector<std::vector<uint32_t>> layers(budget_ + 1);
        for (size_t row = 0; row < nrows; ++row) layers[flag_count(row)].push_back(static_cast<uint32_t>(row));
        for (int f = budget_; f >= 0; --f) {
            bool any = true;
            while (any) {
                any = false;
                ++res.stats.rounds;
                for (uint32_t row : layers[f]) {
                    Mask128 old = z_[row];
                    if (old.empty()) continue;
                    Mask128 fresh = eval(row, old, res.stats);
                    if (fresh != old) {
                        z_[row] = fresh;
                        any = true;
                        if (decide_only && f == 0 && fresh.empty()) return finish(res, row, t0);
                    }
                }
            }
        }
        res.stats.wall_ms = ms(t0);
        for (uint32_t row : layers[0]) {
            if (z_[row].empty()) {
                res.cop_win = true;
                res.winning_placement = vertices(row);
                break;
            }
        }
        return res;
    }

private:
    const Token* toks(size_t row) const { return rows_.data() + row * k_; }
    int flag_count(size_t row) const {
        int c = 0;
        for (int i = 0; i < k_; ++i) c += toks(row)[i].flag;
        return c;
    }
    std::vector<int> vertices(size_t row) const {
        std::vector<int> out;
        for (int i = 0; i < k_; ++i) out.push_back(toks(row)[i].v);
        return out;
    }

    void add_row(const std::vector<Token>& cfg) {
        uint32_t id = static_cast<uint32_t>(z_.size());
        index_.emplace(pack(cfg.data(), k_), id);
        rows_.insert(rows_.end(), cfg.begin(), cfg.end());
        Mask128 occ;
        for (const Token& t : cfg) occ.set(t.v);
        occ_.push_back(occ);
        z_.push_back(arena_.all & ~occ);
    }

    uint32_t lookup(Token* cfg) const {
        std::sort(cfg, cfg + k_, [](Token a, Token b) { return a.v != b.v ? a.v < b.v : a.flag < b.flag; });
        auto it = index_.find(pack(cfg, k_));
        return it->second;
    }

    SolveResult finish(SolveResult res, size_t row, clk::time_point t0) {
        res.cop_win = true;
        res.winning_placement = vertices(row);
        res.stats.wall_ms = ms(t0);
        return res;
    }

    static double ms(clk::time_point t0) {
        return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    }

    Mask128 eval(size_t row, Mask128 alive, SolveStats& stats) {
        const Token* src = toks(row);
        Token dest[8];
        Token succ[8];
        // raw per-token destination choices; equal tokens keep nondecreasing
        // destinations so interchangeable assignments appear once
        std::function<void(int)> rec = [&](int i) {
            if (alive.empty()) return;
            if (i == k_) {
                ++stats.transitions;
                Mask128 occd;
                for (int j = 0; j < k_; ++j) occd.set(dest[j].v);
                Mask128 free = arena_.all & ~occd;
                // successor when nobody lands on the evader (flags unchanged)
                for (int j = 0; j < k_; ++j) succ[j] = dest[j];
                Mask128 zq = z_[lookup(succ)];
                Mask128 kill;
                Mask128 check = alive;
                check.for_each([&](int r) {
                    if (!occd.test(r)) {
                        if (!(arena_.closed[r] & free).intersects(zq)) kill.set(r);
                        return;
                    }
                    Mask128 blocked;  // origins of cops that moved onto r
                    int flagged = 0;
                    for (int j = 0; j < k_; ++j) {
                        if (dest[j].v == r) blocked.set(src[j].v);
                        flagged += dest[j].flag | (dest[j].v == r ? 1 : 0);
                    }
                    Mask128 legal = arena_.open[r] & free & ~blocked;
                    if (legal.empty()) {
                        kill.set(r);  // capture, not a push; always allowed
                        return;
                    }
                    if (flagged > budget_) return;  // pushing here would exceed the budget
                    for (int j = 0; j < k_; ++j)
                        succ[j] = {dest[j].v, static_cast<uint8_t>(dest[j].flag | (dest[j].v == r ? 1 : 0))};
                    if (!legal.intersects(z_[lookup(succ)])) kill.set(r);
                });
                alive &= ~kill;
                return;
            }
            auto step = [&](int w) {
                dest[i] = {static_cast<uint8_t>(w), src[i].flag};
                // same source token as the previous slot: enforce order on destinations
                if (i > 0 && src[i].v == src[i - 1].v && src[i].flag == src[i - 1].flag && dest[i - 1].v > w) return;
                rec(i + 1);
            };
            step(src[i].v);
            for (int w : arena_.g->neighbors(src[i].v)) step(w);
        };
        rec(0);
        return alive;
    }

    Arena arena_;
    int n_, k_, budget_;
    std::vector<Token> rows_;
    std::vector<Mask128> occ_;
    std::vector<Mask128> z_;
    std::unordered_map<uint64_t, uint32_t> index_;
};

}  // namespace

SolveResult solve_push_budget(const Graph& g, int k, int p, const SolveOptions& opts) {
    if (k < 1) fail_parameter("k must be >= 1");
    if (p < 0 || p > k) fail_parameter("push budget must be in 0..k");
    if (!graphcore::metrics(g).is_connected) fail_input("solver requires a connected graph");
    PushCore core(g, k, p, opts);
    return core.run(opts.decide_only);
}

ValueResult push_number(const Graph& g, const SolveOptions& opts, std::optional<int> known_ccr) {
    int k = known_ccr ? *known_ccr : cheating_robot_number(g, opts).value;
    ValueResult out;
    for (int p = 0; p <= k; ++p) {
        SolveResult r = solve_push_budget(g, k, p, opts);
        out.stats.transitions += r.stats.transitions;
        out.stats.rounds += r.stats.rounds;
        out.stats.wall_ms += r.stats.wall_ms;
        out.stats.configs = std::max(out.stats.configs, r.stats.configs);
        out.stats.states = std::max(out.stats.states, r.stats.states);
        if (r.cop_win) {
            out.value = p;
            out.placement = r.winning_placement;
            return out;
        }
    }
    throw Error(ErrorKind::internal, "push search failed: unbudgeted game should win at p=k");
}

}  // namespace cheatbot::solver
