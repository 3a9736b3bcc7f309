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
#include "engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "error.hpp"

namespace cheatbot::engine {

std::vector<int> canonicalize(std::vector<int> cops) {
    std::sort(cops.begin(), cops.end());
    return cops;
}

// ---- spec-level move API ----------------------------------------------------

std::vector<MoveEvent> cop_moves(const CopTurnState& s, const Graph& g) {
    int k = static_cast<int>(s.cops.size());
    if (k == 0) fail_parameter("cop_moves requires at least one cop");
    double product = 1;
    for (int c : s.cops) product *= g.degree(c) + 1;
    if (product > 2e7) fail_budget("collective move enumeration too large (" + std::to_string((long long)product) + " raw moves)");

    // key: canonical successor + induced forbidden set + pusher count
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, MoveEvent> dedup;
    std::vector<int> dest(k);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            MoveEvent ev;
            ev.dest = dest;
            std::sort(ev.dest.begin(), ev.dest.end());
            for (int j = 0; j < k; ++j) {
                ev.traversed.emplace_back(s.cops[j], dest[j]);
                if (dest[j] == s.robber) {
                    ++ev.pusher_count;
                    ev.forbidden.push_back(s.cops[j]);
                }
            }
            std::sort(ev.traversed.begin(), ev.traversed.end());
            std::sort(ev.forbidden.begin(), ev.forbidden.end());
            ev.forbidden.erase(std::unique(ev.forbidden.begin(), ev.forbidden.end()), ev.forbidden.end());
            dedup.emplace(std::make_tuple(ev.dest, ev.forbidden, ev.pusher_count), std::move(ev));
            return;
        }
        dest[i] = s.cops[i];
        rec(i + 1);
        for (int w : g.neighbors(s.cops[i])) {
            dest[i] = w;
            rec(i + 1);
        }
    };
    rec(0);
    std::vector<MoveEvent> out;
    out.reserve(dedup.size());
    for (auto& [key, ev] : dedup) out.push_back(std::move(ev));
    return out;
}

std::vector<int> robber_responses(const RobberTurnState& s, const Graph& g, const Ruleset& rules) {
    std::vector<bool> occupied(g.vertex_count(), false);
    for (int c : s.cops) occupied[c] = true;
    std::vector<int> out;
    auto consider = [&](int v) {
        switch (rules.game) {
            case Game::cheating_robot:
                if (occupied[v]) return;
                if (v != s.robber &&
                    std::find(s.forbidden.begin(), s.forbidden.end(), v) != s.forbidden.end())
                    return;
                out.push_back(v);
                break;
            case Game::surrounding:
                if (!occupied[v]) out.push_back(v);
                break;
            case Game::bodyguard:
                if (rules.bodyguard.president_colocation || !occupied[v]) out.push_back(v);
                break;
        }
    };
    consider(s.robber);
    for (int v : g.neighbors(s.robber)) consider(v);
    std::sort(out.begin(), out.end());
    if (out.empty() && rules.game == Game::bodyguard) out.push_back(s.robber);  // blocked president stays
    return out;
}

bool surround_holds(const std::vector<int>& cops, int v, const Graph& g) {
    for (int u : g.neighbors(v))
        if (std::find(cops.begin(), cops.end(), u) == cops.end()) return false;
    return true;
}

std::vector<InitialPlacement> initial_states(const Graph& g, int k, const Ruleset& rules) {
    if (k < 1) fail_parameter("placement requires k >= 1");
    int n = g.vertex_count();
    MultisetIndexer idx(n, k);
    if (idx.count() > 5'000'000) fail_budget("too many cop placements to enumerate");
    bool evader_anywhere = rules.game == Game::bodyguard && rules.bodyguard.president_colocation;
    std::vector<InitialPlacement> out;
    out.reserve(idx.count());
    for (uint64_t id = 0; id < idx.count(); ++id) {
        InitialPlacement p;
        p.cops = idx.unrank(id);
        std::vector<bool> occupied(n, false);
        for (int c : p.cops) occupied[c] = true;
        for (int v = 0; v < n; ++v)
            if (evader_anywhere || !occupied[v]) p.robbers.push_back(v);
        out.push_back(std::move(p));
    }
    return out;
}

// ---- multiset ranking --------------------------------------------------------

MultisetIndexer::MultisetIndexer(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0) fail_parameter("multiset indexer needs n >= 1, k >= 0");
    int top = n + k + 1;
    choose_.assign(top, std::vector<uint64_t>(k + 2, 0));
    constexpr uint64_t cap = ~0ULL;
    for (int a = 0; a < top; ++a) {
        choose_[a][0] = 1;
        for (int b = 1; b <= k + 1; ++b) {
            if (a == 0) {
                choose_[a][b] = 0;
                continue;
            }
            uint64_t x = choose_[a - 1][b], y = choose_[a - 1][b - 1];
            choose_[a][b] = (x > cap - y) ? cap : x + y;
        }
    }
    count_ = choose_[n + k - 1][k];
}

uint64_t MultisetIndexer::rank(const std::vector<int>& sorted) const { return rank(sorted.data(), static_cast<int>(sorted.size())); }

uint64_t MultisetIndexer::rank(const int* sorted, int k) const {
    // colex rank of the strictly increasing transform w_i = v_i + i
    uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += choose_[sorted[i] + i][i + 1];
    return r;
}

std::vector<int> MultisetIndexer::unrank(uint64_t id) const {
    std::vector<int> v(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        int w = n_ - 1 + i;  // highest possible transformed value
        while (choose_[w][i + 1] > id) --w;
        id -= choose_[w][i + 1];
        v[i] = w - i;
    }
    return v;
}

// ---- arena ---------------------------------------------------------------------

Arena::Arena(const Graph& graph) : g(&graph), n(graph.vertex_count()) {
    if (n > kMaxArenaVertices)
        fail_budget("arena capped at " + std::to_string(kMaxArenaVertices) + " vertices, got " + std::to_string(n));
    all = Mask128::all(n);
    open.resize(n);
    closed.resize(n);
    for (int v = 0; v < n; ++v) {
        Mask128 m;
        for (int u : graph.neighbors(v)) m.set(u);
        open[v] = m;
        m.set(v);
        closed[v] = m;
    }
}

// ---- destination enumerator ------------------------------------------------------

void DestEnumerator::reset(const int* origins, int k, int banned) {
    if (k > kMaxCops) fail_budget("at most " + std::to_string(kMaxCops) + " cops supported");
    tokens_.assign(origins, origins + k);
    std::sort(tokens_.begin(), tokens_.end());
    banned_ = banned;
    cand_.clear();
    Mask128 candmask;
    for (int t : tokens_) candmask |= arena_.closed[t];
    if (banned_ >= 0) candmask.clear(banned_);
    candmask.for_each([this](int v) { cand_.push_back(v); });
    tok_cand_.resize(k);
    tok_max_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        Mask128 m = arena_.closed[tokens_[i]];
        if (banned_ >= 0) m.clear(banned_);
        tok_cand_[i] = m;
        for (int j = 0; j < static_cast<int>(cand_.size()); ++j)
            if (m.test(cand_[j])) tok_max_[i] = j;
    }
    slot_dest_.assign(k, -1);
    tok_slot_.assign(k, -1);
    slot_tok_.assign(k, -1);
    seen_.assign(k, -1);
    snap_ts_.assign(k, {});
    snap_st_.assign(k, {});
    dests_.assign(k, -1);
    if (occ_count_.size() != static_cast<size_t>(arena_.n)) occ_count_.assign(arena_.n, 0);
    stamp_ = 0;
}

bool DestEnumerator::augment(int slot, int dest, std::vector<int>& seen, int stamp) {
    for (int t = 0; t < static_cast<int>(tokens_.size()); ++t) {
        if (seen[t] == stamp || !tok_cand_[t].test(dest)) continue;
        seen[t] = stamp;
        if (tok_slot_[t] < 0 || augment(tok_slot_[t], slot_dest_[tok_slot_[t]], seen, stamp)) {
            tok_slot_[t] = slot;
            slot_tok_[slot] = t;
            return true;
        }
    }
    return false;
}

bool DestEnumerator::enumerate(const std::function<bool(const int*, int, Mask128)>& cb) {
    int k = static_cast<int>(tokens_.size());
    if (k == 0) return true;
    Mask128 occ;

    std::function<bool(int, int)> rec = [&](int slot, int from_ci) -> bool {
        if (slot == k) return cb(dests_.data(), k, occ);
        for (int ci = from_ci; ci < static_cast<int>(cand_.size()); ++ci) {
            int d = cand_[ci];
            snap_ts_[slot] = tok_slot_;
            snap_st_[slot] = slot_tok_;
            slot_dest_[slot] = d;
            ++stamp_;
            if (augment(slot, d, seen_, stamp_)) {
                // every still-unmatched token must reach some candidate >= ci
                bool ok = true;
                for (int t = 0; t < k && ok; ++t)
                    if (tok_slot_[t] < 0 && tok_max_[t] < ci) ok = false;
                if (ok) {
                    dests_[slot] = d;
                    if (!occ_count_[d]++) occ.set(d);
                    bool cont = rec(slot + 1, ci);
                    if (!--occ_count_[d]) occ.clear(d);
                    if (!cont) {
                        tok_slot_ = snap_ts_[slot];
                        slot_tok_ = snap_st_[slot];
                        return false;
                    }
                }
            }
            tok_slot_ = snap_ts_[slot];
            slot_tok_ = snap_st_[slot];
            slot_dest_[slot] = -1;
        }
        return true;
    };
    return rec(0, 0);
}

bool DestEnumerator::can_force(const int* dest_sorted, int k, int target, Mask128 block) const {
    // consume one token per blocked vertex, all sent to `target`
    std::vector<int> avail = tokens_;
    std::vector<int> need(dest_sorted, dest_sorted + k);
    bool ok = true;
    block.for_each([&](int v) {
        if (!ok) return;
        auto it = std::find(avail.begin(), avail.end(), v);
        auto nt = std::find(need.begin(), need.end(), target);
        if (it == avail.end() || nt == need.end() || !arena_.closed[v].test(target)) {
            ok = false;
            return;
        }
        avail.erase(it);
        need.erase(nt);
    });
    if (!ok) return false;
    return feasible_counts(std::move(avail), std::move(need));
}

bool DestEnumerator::feasible_counts(std::vector<int> avail_tokens, std::vector<int> need) const {
    int k = static_cast<int>(need.size());
    if (static_cast<int>(avail_tokens.size()) != k) return false;
    // Kuhn over the residual instance; sizes are at most kMaxCops
    std::vector<int> slot_of(k, -1), tok_of(k, -1), seen(k, -1);
    int stamp = 0;
    std::function<bool(int)> match = [&](int slot) -> bool {
        for (int t = 0; t < k; ++t) {
            if (seen[t] == stamp) continue;
            int o = avail_tokens[t];
            if (!arena_.closed[o].test(need[slot]) || need[slot] == banned_) continue;
            seen[t] = stamp;
            if (slot_of[t] < 0 || match(slot_of[t])) {
                slot_of[t] = slot;
                tok_of[slot] = t;
                return true;
            }
        }
        return false;
    };
    for (int s = 0; s < k; ++s) {
        ++stamp;
        if (!match(s)) return false;
    }
    return true;
}

// ---- one-move capture ---------------------------------------------------------

Mask128 one_move_capture_set(const Arena& arena, const std::vector<int>& cops) {
    Mask128 occ_start;
    for (int c : cops) occ_start.set(c);
    Mask128 origin_set = occ_start;
    Mask128 candidates = arena.all & ~occ_start;
    Mask128 captured;
    DestEnumerator en(arena, cops);
    en.enumerate([&](const int* dest, int k, Mask128 occ) {
        Mask128 landed = occ & candidates & ~captured;
        landed.for_each([&](int r) {
            Mask128 escapes = arena.open[r] & ~occ;  // legality only; stay loses on occupancy
            if (escapes.empty()) {
                captured.set(r);
            } else if (escapes.subset_of(origin_set & arena.open[r]) &&
                       en.can_force(dest, k, r, escapes)) {
                captured.set(r);
            }
        });
        return captured != candidates;  // abort once everything is captured
    });
    return captured;
}

}  // namespace cheatbot::engine
