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
#include "psi.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <unordered_map>

#include "engine.hpp"
#include "error.hpp"

namespace cheatbot::psi {

namespace {

constexpr int kMaxPsiVertices = 16;  // pair sets are 256-bit
constexpr int kMaxPsiCops = 4;

std::vector<int> tuple_of(uint64_t id, int n, int k) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) {
        t[i] = static_cast<int>(id % n);
        id /= n;
    }
    return t;
}

uint32_t occupied_mask(const std::vector<int>& tuple) {
    uint32_t m = 0;
    for (int v : tuple) m |= 1u << v;
    return m;
}

}  // namespace

int PairSet::count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
}

uint32_t surroundable_set(const Graph& g, const std::vector<int>& tuple) {
    engine::Arena arena(g);
    Mask128 m = engine::one_move_capture_set(arena, tuple);
    uint32_t out = 0;
    m.for_each([&](int v) { out |= 1u << v; });
    return out;
}

PsiMap init_psi(const Graph& g, int k, uint64_t pair_budget) {
    int n = g.vertex_count();
    if (n < 1 || n > kMaxPsiVertices)
        fail_budget("psi check supports 1.." + std::to_string(kMaxPsiVertices) + " vertices");
    if (k < 1 || k > kMaxPsiCops) fail_parameter("psi check supports 1..4 cops");
    if (!graphcore::metrics(g).is_connected) fail_input("psi check requires a connected graph");

    uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= static_cast<uint64_t>(n);
    uint64_t pairs = 0;
    {
        double per = 0;
        for (uint64_t t = 0; t < tuples; ++t) {
            double p = 1;
            for (int v : tuple_of(t, n, k)) p *= g.degree(v) + 1;
            per += p;
        }
        if (per > static_cast<double>(pair_budget)) fail_budget("psi pair count exceeds budget");
        pairs = static_cast<uint64_t>(per);
    }

    engine::Arena arena(g);
    std::vector<uint32_t> open(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) open[v] |= 1u << u;
    uint32_t allmask = n == 32 ? ~0u : (1u << n) - 1;

    // per-tuple occupancy and one-move capture sets (memoized by multiset)
    std::vector<uint32_t> vmask(tuples), smask(tuples);
    std::unordered_map<uint64_t, uint32_t> s_memo;
    engine::MultisetIndexer midx(n, k);
    for (uint64_t t = 0; t < tuples; ++t) {
        std::vector<int> tup = tuple_of(t, n, k);
        vmask[t] = occupied_mask(tup);
        std::vector<int> sorted = tup;
        std::sort(sorted.begin(), sorted.end());
        uint64_t key = midx.rank(sorted);
        auto it = s_memo.find(key);
        if (it == s_memo.end()) {
            Mask128 cap = engine::one_move_capture_set(arena, sorted);
            uint32_t sm = 0;
            cap.for_each([&](int v) { sm |= 1u << v; });
            it = s_memo.emplace(key, sm).first;
        }
        smask[t] = it->second;
    }

    PsiMap psi;
    psi.n = n;
    psi.k = k;
    psi.tuple_count = tuples;
    psi.off.assign(tuples + 1, 0);
    psi.succ.reserve(pairs);
    psi.entries.reserve(pairs);

    std::vector<int> t1(k), t2(k);
    for (uint64_t a = 0; a < tuples; ++a) {
        psi.off[a] = psi.succ.size();
        t1 = tuple_of(a, n, k);
        uint32_t safe1 = allmask & ~(vmask[a] | smask[a]);
        // enumerate componentwise closed-neighborhood successors
        std::function<void(int, uint64_t)> rec = [&](int i, uint64_t id) {
            if (i == k) {
                uint32_t safe2 = allmask & ~(vmask[id] | smask[id]);
                // origins of cops landing on a given vertex
                PairSet e;
                uint32_t r1s = safe1;
                while (r1s) {
                    int r1 = std::countr_zero(r1s);
                    r1s &= r1s - 1;
                    uint32_t x = 0;
                    for (int j = 0; j < k; ++j)
                        if (t2[j] == r1) x |= 1u << t1[j];
                    uint32_t r2s = safe2 & open[r1] & ~x;
                    while (r2s) {
                        int r2 = std::countr_zero(r2s);
                        r2s &= r2s - 1;
                        e.set(r1 * n + r2);
                    }
                }
                psi.succ.push_back(id);
                psi.entries.push_back(e);
                return;
            }
            uint64_t scale = 1;
            for (int j = 0; j < i; ++j) scale *= n;
            t2[i] = t1[i];
            rec(i + 1, id + scale * t1[i]);
            for (int w : g.neighbors(t1[i])) {
                t2[i] = w;
                rec(i + 1, id + scale * w);
            }
        };
        rec(0, 0);
    }
    psi.off[tuples] = psi.succ.size();
    return psi;
}

void refine_to_fixpoint(PsiMap& psi, bool stop_on_empty) {
    int n = psi.n;
    uint64_t tuples = psi.tuple_count;
    uint32_t allmask = n == 32 ? ~0u : (1u << n) - 1;

    auto first_entries = [n](const PairSet& e) {
        uint32_t m = 0;
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = 0; r2 < n; ++r2)
                if (e.test(r1 * n + r2)) {
                    m |= 1u << r1;
                    break;
                }
        return m;
    };
    auto second_entries = [n](const PairSet& e) {
        uint32_t m = 0;
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = 0; r2 < n; ++r2)
                if (e.test(r1 * n + r2)) m |= 1u << r2;
        return m;
    };
    // bitset of all (r1, r2) with r1 in `rows` and r2 in `cols`
    auto expand = [n](uint32_t rows, uint32_t cols) {
        PairSet p;
        uint32_t rs = rows;
        while (rs) {
            int r1 = std::countr_zero(rs);
            rs &= rs - 1;
            int base = r1 * n;
            int word = base >> 6, off = base & 63;
            uint64_t pat = cols;
            p.w[word] |= pat << off;
            if (off + n > 64 && word + 1 < 4) p.w[word + 1] |= pat >> (64 - off);
        }
        return p;
    };

    // successor lists are emitted unsorted; sort (succ, entries) per tuple once
    for (uint64_t a = 0; a < tuples; ++a) {
        uint64_t lo = psi.off[a], hi = psi.off[a + 1];
        std::vector<uint64_t> idx(hi - lo);
        for (uint64_t i = 0; i < hi - lo; ++i) idx[i] = lo + i;
        std::sort(idx.begin(), idx.end(), [&](uint64_t x, uint64_t y) { return psi.succ[x] < psi.succ[y]; });
        std::vector<uint64_t> s2(hi - lo);
        std::vector<PairSet> e2(hi - lo);
        for (uint64_t i = 0; i < hi - lo; ++i) {
            s2[i] = psi.succ[idx[i]];
            e2[i] = psi.entries[idx[i]];
        }
        std::copy(s2.begin(), s2.end(), psi.succ.begin() + lo);
        std::copy(e2.begin(), e2.end(), psi.entries.begin() + lo);
    }
    // entry index of the ordered pair (a, b); the tuple-move relation is
    // symmetric, so predecessors of b are exactly its successors
    auto entry_of = [&psi](uint64_t a, uint64_t b) -> uint64_t {
        auto lo = psi.succ.begin() + psi.off[a];
        auto it = std::lower_bound(lo, psi.succ.begin() + psi.off[a + 1], b);
        return static_cast<uint64_t>(it - psi.succ.begin());
    };

    std::vector<uint32_t> psi1(psi.pair_count()), psi2(psi.pair_count());
    for (uint64_t e = 0; e < psi.pair_count(); ++e) {
        psi1[e] = first_entries(psi.entries[e]);
        psi2[e] = second_entries(psi.entries[e]);
    }

    // in(t):  r1 values arrivable via every move landing on t  = AND psi2(Z, t)
    // out(t): r2 values usable against every move leaving t    = AND psi1(t, C)
    std::vector<uint32_t> in(tuples), out(tuples);
    bool changed = true;
    while (changed) {
        changed = false;
        ++psi.iterations;
        for (uint64_t t = 0; t < tuples; ++t) {
            uint32_t i_acc = allmask, o_acc = allmask;
            for (uint64_t i = psi.off[t]; i < psi.off[t + 1]; ++i) {
                o_acc &= psi1[i];
                i_acc &= psi2[entry_of(psi.succ[i], t)];
            }
            in[t] = i_acc;
            out[t] = o_acc;
        }
        for (uint64_t a = 0; a < tuples; ++a) {
            for (uint64_t i = psi.off[a]; i < psi.off[a + 1]; ++i) {
                PairSet keep = expand(in[a], out[psi.succ[i]]);
                PairSet& e = psi.entries[i];
                PairSet before = e;
                e &= keep;
                if (!(e == before)) {
                    psi1[i] = first_entries(e);
                    psi2[i] = second_entries(e);
                    changed = true;
                    if (stop_on_empty && e.empty()) return;
                }
            }
        }
    }
}

bool has_empty_entry(const PsiMap& psi) {
    for (const PairSet& e : psi.entries)
        if (e.empty()) return true;
    return false;
}

CheckResult check_ccr_le_k(const Graph& g, int k, uint64_t pair_budget) {
    auto t0 = std::chrono::steady_clock::now();
    PsiMap psi = init_psi(g, k, pair_budget);
    refine_to_fixpoint(psi, /*stop_on_empty=*/true);
    CheckResult res;
    res.cop_win = has_empty_entry(psi);
    res.tuples = psi.tuple_count;
    res.pairs = psi.pair_count();
    res.iterations = psi.iterations;
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::string dump_json(const PsiMap& psi) {
    std::ostringstream out;
    struct Row {
        uint64_t a, b;
        int count;
    };
    std::vector<Row> rows;
    for (uint64_t a = 0; a < psi.tuple_count; ++a)
        for (uint64_t i = psi.off[a]; i < psi.off[a + 1]; ++i)
            rows.push_back({a, psi.succ[i], psi.entries[i].count()});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.count < y.count; });
    out << "{\n  \"n\": " << psi.n << ",\n  \"k\": " << psi.k << ",\n  \"iterations\": " << psi.iterations
        << ",\n  \"pairs\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << "    {\"t1\": " << rows[i].a << ", \"t2\": " << rows[i].b << ", \"size\": " << rows[i].count << "}";
        out << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace cheatbot::psi
