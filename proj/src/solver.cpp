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
#include "solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace cheatbot::solver {

using engine::Arena;
using engine::DestEnumerator;
using engine::MultisetIndexer;

uint64_t WinnerTable::hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<uint64_t>(n));
    mix(static_cast<uint64_t>(k));
    for (const auto& r : rows) {
        mix(r.w0);
        mix(r.w1);
    }
    return h;
}

namespace {

using clk = std::chrono::steady_clock;

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void check_preconditions(const Graph& g, int k) {
    if (k < 1) fail_parameter("k must be >= 1");
    if (g.vertex_count() < 1) fail_parameter("graph must be nonempty");
    if (!graphcore::metrics(g).is_connected) fail_input("solver requires a connected graph");
}

void check_budget(const Graph& g, int k, uint64_t nconf, uint64_t budget) {
    double logsum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) logsum += std::log(static_cast<double>(g.degree(v)) + 1.0);
    double est_moves = std::exp(static_cast<double>(k) * logsum / g.vertex_count());
    est_moves = std::min(est_moves, static_cast<double>(nconf));
    double est = static_cast<double>(nconf) * est_moves;
    if (est > static_cast<double>(budget))
        fail_budget("estimated transition count " + std::to_string(static_cast<long long>(est)) +
                    " exceeds budget " + std::to_string(budget));
    if (nconf > 60'000'000) fail_budget("configuration count " + std::to_string(nconf) + " too large");
}

// Generates sorted multisets over 0..n-1 in colex (= rank) order.
bool next_multiset(std::vector<int>& v, int n) {
    int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? v[i + 1] : n - 1;
        if (v[i] < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = 0;
            return true;
        }
    }
    return false;
}

inline Mask128 load_row(const Mask128& r) {
    Mask128 out;
    out.w0 = std::atomic_ref<const uint64_t>(r.w0).load(std::memory_order_relaxed);
    out.w1 = std::atomic_ref<const uint64_t>(r.w1).load(std::memory_order_relaxed);
    return out;
}

inline void store_row(Mask128& r, Mask128 v) {
    std::atomic_ref<uint64_t>(r.w0).store(v.w0, std::memory_order_relaxed);
    std::atomic_ref<uint64_t>(r.w1).store(v.w1, std::memory_order_relaxed);
}

/**
 * Greatest-fixed-point solver for the cheating-robot and surrounding games.
 *
 * Row T holds the evader positions that still look winning with cops at T.
 * One evaluation intersects, over every collective cop move T -> T', the set
 * of positions the evader survives. Rows only shrink, so chaotic re-evaluation
 * with stale reads still converges to the unique greatest fixed point: any
 * intermediate table over-approximates it, which also makes the early exit
 * sound (an empty row certifies a cop-winning placement at any time).
 */
class GfpCore {
public:
    GfpCore(const Graph& g, int k, Game game, const SolveOptions& opts)
        : arena_(g), idx_(g.vertex_count(), k), game_(game), opts_(opts), n_(g.vertex_count()), k_(k) {
        nconf_ = idx_.count();
        check_budget(g, k, nconf_, opts.transition_budget);
        tokens_.resize(nconf_ * static_cast<size_t>(k_));
        occ_.resize(nconf_);
        z_.resize(nconf_);
        dead_.resize(nconf_);
        dead_gen_.assign(nconf_, 0);
        std::vector<int> cfg(k_, 0);
        uint64_t row = 0;
        do {
            Mask128 occ;
            for (int i = 0; i < k_; ++i) {
                tokens_[row * k_ + i] = cfg[i];
                occ.set(cfg[i]);
            }
            occ_[row] = occ;
            z_[row] = arena_.all & ~occ;
            ++row;
        } while (next_multiset(cfg, n_));
    }

    SolveResult run() {
        auto t0 = clk::now();
        SolveResult res;
        res.stats.configs = nconf_;
        res.stats.states = nconf_ * static_cast<uint64_t>(n_);

        size_t words = (nconf_ + 63) / 64;
        std::vector<uint64_t> cur(words, 0), next(words, 0);
        // immediate wins: placements covering every vertex
        for (uint64_t t = 0; t < nconf_; ++t) {
            if (z_[t].empty()) {
                if (opts_.decide_only) return finish(res, t, t0);
                continue;
            }
            cur[t >> 6] |= 1ULL << (t & 63);
        }

        // first sweep visits well-spread configurations first; later sweeps are
        // worklist-driven so the order only affects the early exit
        std::vector<uint32_t> order(nconf_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [this](uint32_t a, uint32_t b) {
            return occ_[a].count() > occ_[b].count();
        });

        int nthreads = std::max(1, opts_.threads);
        std::atomic<uint64_t> found{nconf_};  // lowest winning row seen
        std::atomic<bool> stop{false};
        std::atomic<uint64_t> trans{0};
        bool first_round = true;

        while (true) {
            std::atomic<bool> any_dirty{false};
            auto work = [&](int tid) {
                Ctx ctx(arena_);
                uint64_t local_trans = 0;
                auto process = [&](uint64_t t) {
                    if (stop.load(std::memory_order_relaxed)) return false;
                    Mask128 old = load_row(z_[t]);
                    if (old.empty()) return true;
                    Mask128 fresh = eval_row(t, old, ctx, local_trans);
                    if (fresh != old) {
                        store_row(z_[t], fresh);
                        if (fresh.empty()) {
                            if (opts_.decide_only) {
                                uint64_t prev = found.load();
                                while (t < prev && !found.compare_exchange_weak(prev, t)) {}
                                stop.store(true, std::memory_order_relaxed);
                                return false;
                            }
                            // neighbors still depend on this row's new value
                            ctx.visited.clear();
                            ctx.en.reset(tokens_.data() + t * k_, k_);
                            ctx.en.enumerate([&](const int* dest, int kk, Mask128) {
                                ctx.visited.push_back(idx_.rank(dest, kk));
                                return true;
                            });
                        }
                        for (uint64_t nb : ctx.visited)
                            std::atomic_ref<uint64_t>(next[nb >> 6]).fetch_or(1ULL << (nb & 63), std::memory_order_relaxed);
                        any_dirty.store(true, std::memory_order_relaxed);
                    }
                    return true;
                };
                if (first_round) {
                    for (size_t i = tid; i < order.size(); i += nthreads)
                        if (!process(order[i])) break;
                } else {
                    for (size_t w = tid; w < words; w += nthreads) {
                        uint64_t bits = cur[w];
                        bool go = true;
                        while (bits && go) {
                            int b = std::countr_zero(bits);
                            bits &= bits - 1;
                            go = process((static_cast<uint64_t>(w) << 6) | b);
                        }
                        if (!go) break;
                    }
                }
                trans.fetch_add(local_trans, std::memory_order_relaxed);
            };

            if (nthreads == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            ++res.stats.rounds;
            first_round = false;
            if (stop.load()) {
                res.stats.transitions = trans.load();
                return finish(res, found.load(), t0);
            }
            if (!any_dirty.load()) break;
            std::swap(cur, next);
            std::fill(next.begin(), next.end(), 0);
            ++generation_;
        }

        res.stats.transitions = trans.load();
        // fixed point reached: collect the full table and scan for a win
        res.stats.wall_ms = ms_since(t0);
        auto table = std::make_shared<WinnerTable>();
        table->n = n_;
        table->k = k_;
        table->game = game_;
        table->rows = z_;
        res.table = std::move(table);
        for (uint64_t t = 0; t < nconf_; ++t) {
            if (z_[t].empty()) {
                res.cop_win = true;
                res.winning_placement = unrank(t);
                break;
            }
        }
        return res;
    }

private:
    struct Ctx {
        explicit Ctx(const Arena& a) : en(a) {}
        DestEnumerator en;
        std::vector<uint64_t> visited;
    };

    std::vector<int> unrank(uint64_t t) const {
        return std::vector<int>(tokens_.begin() + t * k_, tokens_.begin() + (t + 1) * k_);
    }

    SolveResult finish(SolveResult res, uint64_t row, clk::time_point t0) {
        res.cop_win = true;
        res.winning_placement = unrank(row);
        res.stats.wall_ms = ms_since(t0);
        return res;
    }

    // Dead masks for a destination configuration; stale values under-kill,
    // which keeps the iteration sound (see class comment).
    Mask128 dead_mask(uint64_t t, Mask128 zt) {
        uint32_t gen = std::atomic_ref<uint32_t>(dead_gen_[t]).load(std::memory_order_acquire);
        if (gen == generation_) return load_row(dead_[t]);
        Mask128 m;
        Mask128 free = arena_.all & ~occ_[t];
        if (game_ == Game::surrounding) {
            for (int r = 0; r < n_; ++r)
                if ((arena_.open[r] & free).empty() || !(arena_.closed[r] & free).intersects(zt)) m.set(r);
        } else {
            for (int r = 0; r < n_; ++r)
                if (!(arena_.closed[r] & free).intersects(zt)) m.set(r);
        }
        store_row(dead_[t], m);
        std::atomic_ref<uint32_t>(dead_gen_[t]).store(generation_, std::memory_order_release);
        return m;
    }

    Mask128 eval_row(uint64_t row, Mask128 alive, Ctx& ctx, uint64_t& trans) {
        const int* toks = tokens_.data() + row * k_;
        Mask128 origin_set = occ_[row];
        ctx.visited.clear();
        ctx.en.reset(toks, k_);
        ctx.en.enumerate([&](const int* dest, int kk, Mask128 occd) {
            uint64_t t = idx_.rank(dest, kk);
            ctx.visited.push_back(t);
            ++trans;
            Mask128 zt = load_row(z_[t]);
            Mask128 dead = dead_mask(t, zt);
            if (game_ == Game::surrounding) {
                alive &= ~dead;
            } else {
                Mask128 free = arena_.all & ~occd;
                Mask128 kill = alive & dead & free;
                Mask128 landed = alive & occd;
                if (!landed.empty()) {
                    Mask128 freez = free;
                    landed.for_each([&](int r) {
                        Mask128 esc = arena_.open[r] & freez & zt;
                        if (esc.empty()) {
                            kill.set(r);
                        } else if (esc.subset_of(origin_set) && ctx.en.can_force(dest, kk, r, esc)) {
                            kill.set(r);
                        }
                    });
                }
                alive &= ~kill;
            }
            return !alive.empty();
        });
        return alive;
    }

    Arena arena_;
    MultisetIndexer idx_;
    Game game_;
    SolveOptions opts_;
    int n_, k_;
    uint64_t nconf_ = 0;
    uint32_t generation_ = 1;
    std::vector<int> tokens_;
    std::vector<Mask128> occ_;
    std::vector<Mask128> z_;
    std::vector<Mask128> dead_;
    std::vector<uint32_t> dead_gen_;
};

/**
 * Bodyguard game, two phases over post-guard-turn states (T, r):
 * the maintenance region is the greatest fixed point of "surrounded now and
 * re-coverable after any president move"; the winner region is its attractor.
 */
class BodyguardCore {
public:
    BodyguardCore(const Graph& g, int k, const BodyguardOptions& bg, const SolveOptions& opts)
        : arena_(g), idx_(g.vertex_count(), k), bg_(bg), n_(g.vertex_count()), k_(k) {
        nconf_ = idx_.count();
        check_budget(g, k, nconf_, opts.transition_budget);
        tokens_.resize(nconf_ * static_cast<size_t>(k_));
        occ_.resize(nconf_);
        std::vector<int> cfg(k_, 0);
        uint64_t row = 0;
        do {
            Mask128 occ;
            for (int i = 0; i < k_; ++i) {
                tokens_[row * k_ + i] = cfg[i];
                occ.set(cfg[i]);
            }
            occ_[row] = occ;
            ++row;
        } while (next_multiset(cfg, n_));
    }

    SolveResult run(const SolveOptions& opts) {
        auto t0 = clk::now();
        SolveResult res;
        res.stats.configs = nconf_;
        res.stats.states = nconf_ * static_cast<uint64_t>(n_);

        // phase 1: maintenance (greatest fixed point, rows shrink)
        std::vector<Mask128> m(nconf_);
        for (uint64_t t = 0; t < nconf_; ++t) m[t] = surround_mask(t);
        iterate(m, /*grow=*/false, res.stats);

        // phase 2: attractor of the maintenance region (least fixed point, rows grow)
        std::vector<Mask128> a = m;
        iterate(a, /*grow=*/true, res.stats);

        // placement: guards pick T, the president answers, guards move first or second
        DestEnumerator en(arena_);
        for (uint64_t t = 0; t < nconf_ && !res.cop_win; ++t) {
            Mask128 uni;
            en.reset(tokens_.data() + t * k_, k_);
            en.enumerate([&](const int* dest, int kk, Mask128) {
                uni |= a[idx_.rank(dest, kk)];
                return uni != arena_.all;
            });
            Mask128 place = bg_.president_colocation ? arena_.all : (arena_.all & ~occ_[t]);
            bool win;
            if (bg_.guards_move_first) {
                win = place.subset_of(uni);
            } else {
                win = true;
                place.for_each([&](int r0) { win = win && president_moves(t, r0).subset_of(uni); });
            }
            if (win) {
                res.cop_win = true;
                res.winning_placement = std::vector<int>(tokens_.begin() + t * k_, tokens_.begin() + (t + 1) * k_);
            }
        }
        res.stats.wall_ms = ms_since(t0);
        auto table = std::make_shared<WinnerTable>();
        table->n = n_;
        table->k = k_;
        table->game = Game::bodyguard;
        table->rows = std::move(a);
        res.table = std::move(table);
        return res;
    }

private:
    Mask128 surround_mask(uint64_t t) const {
        Mask128 out;
        Mask128 notocc = arena_.all & ~occ_[t];
        for (int r = 0; r < n_; ++r)
            if ((arena_.open[r] & notocc).empty()) out.set(r);
        return out;
    }

    Mask128 president_moves(uint64_t t, int r) const {
        if (bg_.president_colocation) return arena_.closed[r];
        Mask128 p = arena_.closed[r] & ~occ_[t];
        if (p.empty()) p.set(r);  // fully blocked president stays put
        return p;
    }

    void iterate(std::vector<Mask128>& tab, bool grow, SolveStats& stats) {
        std::vector<uint8_t> dirty(nconf_, 1);
        DestEnumerator en(arena_);
        std::vector<uint64_t> visited;
        bool any = true;
        while (any) {
            any = false;
            ++stats.rounds;
            for (uint64_t t = 0; t < nconf_; ++t) {
                if (!dirty[t]) continue;
                dirty[t] = 0;
                Mask128 uni;
                visited.clear();
                en.reset(tokens_.data() + t * k_, k_);
                en.enumerate([&](const int* dest, int kk, Mask128) {
                    uint64_t x = idx_.rank(dest, kk);
                    visited.push_back(x);
                    uni |= tab[x];
                    ++stats.transitions;
                    return true;
                });
                Mask128 base = surround_mask(t);
                Mask128 fresh;
                for (int r = 0; r < n_; ++r) {
                    bool step_ok = president_moves(t, r).subset_of(uni);
                    bool keep = grow ? (tab[t].test(r) || step_ok) : (base.test(r) && tab[t].test(r) && step_ok);
                    if (keep) fresh.set(r);
                }
                if (fresh != tab[t]) {
                    tab[t] = fresh;
                    any = true;
                    for (uint64_t nb : visited) dirty[nb] = 1;
                }
            }
        }
    }

    Arena arena_;
    MultisetIndexer idx_;
    BodyguardOptions bg_;
    int n_, k_;
    uint64_t nconf_ = 0;
    std::vector<int> tokens_;
    std::vector<Mask128> occ_;
};

}  // namespace

SolveResult solve(const Graph& g, int k, const Ruleset& rules, const SolveOptions& opts) {
    check_preconditions(g, k);
    if (rules.game == Game::bodyguard) {
        BodyguardCore core(g, k, rules.bodyguard, opts);
        return core.run(opts);
    }
    GfpCore core(g, k, rules.game, opts);
    return core.run();
}

namespace {

ValueResult search_upward(int lb, int ub, const std::function<SolveResult(int)>& attempt) {
    ValueResult out;
    for (int k = std::max(1, lb); k <= ub; ++k) {
        SolveResult r = attempt(k);
        out.stats.transitions += r.stats.transitions;
        out.stats.rounds += r.stats.rounds;
        out.stats.wall_ms += r.stats.wall_ms;
        out.stats.configs = std::max(out.stats.configs, r.stats.configs);
        out.stats.states = std::max(out.stats.states, r.stats.states);
        if (r.cop_win) {
            out.value = k;
            out.placement = r.winning_placement;
            return out;
        }
    }
    throw Error(ErrorKind::internal, "parameter search exceeded its upper bound");
}

}  // namespace

ValueResult cheating_robot_number(const Graph& g, const SolveOptions& opts) {
    check_preconditions(g, 1);
    int lb = graphcore::degeneracy(g).k;
    SolveOptions o = opts;
    o.decide_only = true;
    return search_upward(lb, g.vertex_count(),
                         [&](int k) { return solve(g, k, {Game::cheating_robot, {}}, o); });
}

ValueResult surrounding_number(const Graph& g, const SolveOptions& opts) {
    check_preconditions(g, 1);
    int lb = g.min_degree();
    SolveOptions o = opts;
    o.decide_only = true;
    return search_upward(lb, g.vertex_count(),
                         [&](int k) { return solve(g, k, {Game::surrounding, {}}, o); });
}

ValueResult bodyguard_number(const Graph& g, const BodyguardOptions& bg, const SolveOptions& opts) {
    check_preconditions(g, 1);
    return search_upward(1, g.vertex_count(),
                         [&](int k) { return solve(g, k, {Game::bodyguard, bg}, opts); });
}

}  // namespace cheatbot::solver
