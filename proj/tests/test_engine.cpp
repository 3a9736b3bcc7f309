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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "corpus.hpp"
#include "engine.hpp"

using namespace cheatbot;
using namespace cheatbot::engine;
using graphcore::Graph;

namespace {

Graph random_connected(int n, std::mt19937& rng) {
    while (true) {
        std::bernoulli_distribution coin(0.45);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        Graph g = Graph::from_edges(n, e);
        if (graphcore::metrics(g).is_connected) return g;
    }
}

// raw per-cop move product, the slow reference for the destination enumerator
void raw_moves(const Graph& g, const std::vector<int>& cops,
               const std::function<void(const std::vector<int>&)>& f) {
    int k = static_cast<int>(cops.size());
    std::vector<int> dest(k);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            f(dest);
            return;
        }
        dest[i] = cops[i];
        rec(i + 1);
        for (int w : g.neighbors(cops[i])) {
            dest[i] = w;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

TEST_CASE("multiset indexer ranks and unranks") {
    for (int n : {2, 5, 9}) {
        for (int k : {1, 2, 3}) {
            MultisetIndexer idx(n, k);
            std::set<uint64_t> seen;
            std::vector<int> v(k, 0);
            std::function<void(int, int)> gen = [&](int i, int lo) {
                if (i == k) {
                    uint64_t r = idx.rank(v);
                    CHECK(r < idx.count());
                    CHECK(seen.insert(r).second);
                    CHECK(idx.unrank(r) == v);
                    return;
                }
                for (int x = lo; x < n; ++x) {
                    v[i] = x;
                    gen(i + 1, x);
                }
            };
            gen(0, 0);
            CHECK(seen.size() == idx.count());
        }
    }
    CHECK(MultisetIndexer(9, 8).count() == 12870);
}

TEST_CASE("cop_moves enumerates deduplicated collective moves") {
    Graph p3 = graphcore::path(3);
    auto evs = cop_moves({{1}, 0}, p3);  // one cop at the centre, evader on a leaf
    CHECK(evs.size() == 3);

    Graph c4 = graphcore::cycle(4);
    auto evs2 = cop_moves({{0, 0}, 2}, c4);  // two co-located cops, evader opposite
    CHECK(evs2.size() == 6);                 // multisets of size 2 over N[0]

    // a cop stepping onto the evader is reported with its pusher slot
    auto evs3 = cop_moves({{1}, 2}, p3);
    bool found = false;
    for (const auto& e : evs3)
        if (e.dest == std::vector<int>{2}) {
            found = true;
            CHECK(e.pusher_count == 1);
            CHECK(e.forbidden == std::vector<int>{1});
        }
    CHECK(found);

    // pusher set nonempty iff the evader's vertex is hit
    for (const auto& e : evs3) CHECK((e.pusher_count > 0) == std::binary_search(e.dest.begin(), e.dest.end(), 2));
}

TEST_CASE("robber_responses per game") {
    Graph c5 = graphcore::cycle(5);
    Ruleset cheat{Game::cheating_robot, {}};
    Ruleset surr{Game::surrounding, {}};

    // cop just moved 1 -> 0 (evader at 0): both 0 and 1 are gone
    CHECK(robber_responses({{0}, 0, {1}}, c5, cheat) == std::vector<int>{4});
    // surrounding: no traversal rule, only occupancy
    CHECK(robber_responses({{0}, 0, {}}, c5, surr) == std::vector<int>{1, 4});
    // pass is allowed when the evader vertex is free
    CHECK(robber_responses({{2}, 0, {}}, c5, cheat) == std::vector<int>{0, 1, 4});

    // capture on a leaf: cop moved from the support onto the leaf
    Graph p5 = graphcore::path(5);
    CHECK(robber_responses({{4}, 4, {3}}, p5, cheat).empty());

    // cheating-robot responses are always a subset of surrounding responses
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected(5, rng);
        int r = static_cast<int>(rng() % 5);
        std::vector<int> cops{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
        std::vector<int> forb;
        for (int u : g.neighbors(r))
            if (rng() % 2) forb.push_back(u);
        auto a = robber_responses({canonicalize(cops), r, forb}, g, cheat);
        auto b = robber_responses({canonicalize(cops), r, {}}, g, surr);
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }

    // a fully blocked president stays put instead of vanishing
    Ruleset body{Game::bodyguard, {{false, true}}};
    Graph p2 = graphcore::path(2);
    CHECK(robber_responses({{1}, 0, {}}, p2, body) == std::vector<int>{0});
}

TEST_CASE("surround_holds checks open-neighborhood occupancy") {
    Graph c5 = graphcore::cycle(5);
    CHECK(surround_holds({1, 4}, 0, c5));
    CHECK(!surround_holds({1, 1}, 0, c5));  // multiplicity does not cover vertex 4
    Graph s3 = graphcore::star(3);
    CHECK(!surround_holds({1, 2}, 0, s3));
    CHECK(surround_holds({1, 2, 3}, 0, s3));
    CHECK(surround_holds({0, 2, 3}, 1, graphcore::complete(4)));
}

TEST_CASE("canonicalize sorts and is idempotent") {
    CHECK(canonicalize({3, 1, 2}) == std::vector<int>{1, 2, 3});
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> v(1 + rng() % 5);
        for (int& x : v) x = static_cast<int>(rng() % 9);
        auto once = canonicalize(v);
        CHECK(canonicalize(once) == once);
    }
}

TEST_CASE("initial_states") {
    Graph p2 = graphcore::path(2);
    auto st = initial_states(p2, 1, {Game::cheating_robot, {}});
    CHECK(st.size() == 2);
    for (const auto& p : st) CHECK(p.robbers.size() == 1);

    auto st2 = initial_states(graphcore::cycle(3), 2, {Game::cheating_robot, {}});
    CHECK(st2.size() == 6);

    // k = n covering everything: no legal evader placement
    auto st3 = initial_states(graphcore::complete(3), 3, {Game::cheating_robot, {}});
    bool degenerate = false;
    for (const auto& p : st3)
        if (p.cops == std::vector<int>{0, 1, 2}) degenerate = p.robbers.empty();
    CHECK(degenerate);

    // bodyguard with co-location: the president may share a guard's vertex
    auto st4 = initial_states(p2, 1, {Game::bodyguard, {{true, true}}});
    for (const auto& p : st4) CHECK(p.robbers.size() == 2);
}

TEST_CASE("destination enumerator matches the raw move product") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_connected(n, rng);
        Arena arena(g);
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<int> cops(k);
        for (int& c : cops) c = static_cast<int>(rng() % n);
        std::sort(cops.begin(), cops.end());

        std::set<std::vector<int>> expect;
        raw_moves(g, cops, [&](const std::vector<int>& d) {
            std::vector<int> s = d;
            std::sort(s.begin(), s.end());
            expect.insert(s);
        });

        std::set<std::vector<int>> got;
        DestEnumerator en(arena, cops);
        en.enumerate([&](const int* dest, int kk, Mask128 occ) {
            std::vector<int> s(dest, dest + kk);
            CHECK(std::is_sorted(s.begin(), s.end()));
            Mask128 m;
            for (int v : s) m.set(v);
            CHECK(m == occ);
            CHECK(got.insert(s).second);  // each multiset exactly once
            return true;
        });
        CHECK(got == expect);
    }
}

TEST_CASE("can_force agrees with exhaustive matching search") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = random_connected(n, rng);
        Arena arena(g);
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<int> cops(k);
        for (int& c : cops) c = static_cast<int>(rng() % n);
        std::sort(cops.begin(), cops.end());
        DestEnumerator en(arena, cops);

        // for every reachable destination multiset and every landed target,
        // compare forced-block feasibility against the raw product
        en.enumerate([&](const int* dest, int kk, Mask128 occ) {
            occ.for_each([&](int r) {
                // candidate block sets: subsets of N(r) that hold a cop
                std::vector<int> cand;
                for (int v : g.neighbors(r))
                    if (std::find(cops.begin(), cops.end(), v) != cops.end()) cand.push_back(v);
                for (uint32_t sub = 0; sub < (1u << cand.size()); ++sub) {
                    Mask128 block;
                    for (size_t i = 0; i < cand.size(); ++i)
                        if (sub & (1u << i)) block.set(cand[i]);
                    bool brute = false;
                    raw_moves(g, cops, [&](const std::vector<int>& d) {
                        if (brute) return;
                        std::vector<int> s = d;
                        std::sort(s.begin(), s.end());
                        if (!std::equal(s.begin(), s.end(), dest)) return;
                        Mask128 covered;
                        for (int i = 0; i < kk; ++i)
                            if (d[i] == r) covered.set(cops[i]);
                        if (block.subset_of(covered)) brute = true;
                    });
                    CHECK(en.can_force(dest, kk, r, block) == brute);
                }
            });
            return true;
        });
    }
}

TEST_CASE("one-move capture set matches brute force") {
    std::mt19937 rng(37);
    Ruleset cheat{Game::cheating_robot, {}};
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = random_connected(n, rng);
        Arena arena(g);
        int k = 1 + static_cast<int>(rng() % 2);
        std::vector<int> cops(k);
        for (int& c : cops) c = static_cast<int>(rng() % n);
        std::sort(cops.begin(), cops.end());

        Mask128 fast = one_move_capture_set(arena, cops);
        for (int r = 0; r < n; ++r) {
            if (std::find(cops.begin(), cops.end(), r) != cops.end()) {
                CHECK(!fast.test(r));
                continue;
            }
            bool brute = false;
            raw_moves(g, cops, [&](const std::vector<int>& d) {
                if (brute) return;
                std::vector<int> forb;
                for (int i = 0; i < k; ++i)
                    if (d[i] == r) forb.push_back(cops[i]);
                if (robber_responses({canonicalize(d), r, forb}, g, cheat).empty()) brute = true;
            });
            CHECK(fast.test(r) == brute);
        }
    }

    // a single cop never captures on a cycle in one move
    Graph c4 = graphcore::cycle(4);
    Arena a4(c4);
    for (int v = 0; v < 4; ++v) CHECK(one_move_capture_set(a4, {v}).empty());
    // cop at the centre of P_3 captures either leaf
    Graph p3 = graphcore::path(3);
    Arena a3(p3);
    CHECK(one_move_capture_set(a3, {1}).test(0));
    CHECK(one_move_capture_set(a3, {1}).test(2));
}
