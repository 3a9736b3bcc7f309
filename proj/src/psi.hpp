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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cheatbot::psi {

using graphcore::Graph;

/**
 * The evasion-function characterization of "k cops suffice", implemented over
 * labelled cop tuples exactly as a refinement to a greatest fixed point. It is
 * deliberately independent of the retrograde solver and serves as its
 * cross-check oracle. Cop configurations here are ordered tuples (the tuple
 * coordinates carry the matching between consecutive positions); the domain
 * takes every componentwise closed-neighborhood pair, including T -> T, since
 * the all-pass collective move is legal.
 */
struct PairSet {
    std::array<uint64_t, 4> w{};  // bitset over (r1, r2) pairs, r1 * n + r2

    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    int count() const;
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    PairSet& operator&=(const PairSet& o) {
        for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
        return *this;
    }
    bool operator==(const PairSet&) const = default;
};

struct PsiMap {
    int n = 0;
    int k = 0;
    uint64_t tuple_count = 0;
    // CSR over ordered tuple pairs: for tuple t, successors succ[off[t]..off[t+1])
    std::vector<uint64_t> off;
    std::vector<uint64_t> succ;
    std::vector<PairSet> entries;  // parallel to succ
    uint64_t iterations = 0;

    uint64_t pair_count() const { return succ.size(); }
};

struct SurroundableCache;

/// The set S_T: evader vertices capturable in one collective move from the tuple T.
uint32_t surroundable_set(const Graph& g, const std::vector<int>& tuple);

/// Algorithm start state: every pair of moves mapped to all immediately-safe evader moves.
PsiMap init_psi(const Graph& g, int k, uint64_t pair_budget = 50'000'000);

/**
 * Greatest fixed point under the two pruning rules: a kept (r1, r2) must have
 * r2 usable as a first entry against every continuation move, and r1 must be
 * reachable as a second entry of every preceding move. Entries only shrink.
 * When `stop_on_empty` is set the refinement aborts once some entry empties
 * (the verdict is already determined).
 */
void refine_to_fixpoint(PsiMap& psi, bool stop_on_empty = false);

bool has_empty_entry(const PsiMap& psi);

struct CheckResult {
    bool cop_win = false;  // some fixed-point entry is empty
    uint64_t tuples = 0;
    uint64_t pairs = 0;
    uint64_t iterations = 0;
    double wall_ms = 0;
};

/// Full pipeline: init, refine, verdict.
CheckResult check_ccr_le_k(const Graph& g, int k, uint64_t pair_budget = 50'000'000);

/// Inspection dump: entry counts per pair, empty entries listed first.
std::string dump_json(const PsiMap& psi);

}  // namespace cheatbot::psi
