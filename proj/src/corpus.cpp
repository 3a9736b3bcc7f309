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
#include "corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "error.hpp"

namespace cheatbot::corpus {

namespace {

int pair_index(int i, int j, int n) {  // i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

uint32_t apply_perm(uint32_t mask, const std::vector<int>& perm, int n) {
    uint32_t out = 0;
    for (int i = 0; i < n && mask; ++i)
        for (int j = i + 1; j < n; ++j) {
            int p = pair_index(i, j, n);
            if (mask & (1u << p)) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                out |= 1u << pair_index(a, b, n);
                mask &= ~(1u << p);
            }
        }
    return out;
}

uint32_t canonical(uint32_t mask, const std::vector<std::vector<int>>& perms, int n) {
    uint32_t best = mask;
    for (const auto& p : perms) best = std::min(best, apply_perm(mask, p, n));
    return best;
}

Graph mask_to_graph(uint32_t mask, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (1u << pair_index(i, j, n))) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// all isomorphism classes (connected or not) on n vertices as canonical masks
const std::set<uint32_t>& all_classes(int n) {
    static std::mutex mu;
    static std::map<int, std::set<uint32_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, std::set<uint32_t>{0u}).first->second;
    const std::set<uint32_t>& prev = all_classes(n - 1);
    auto perms = all_perms(n);
    std::set<uint32_t> cur;
    for (uint32_t base : prev) {
        // re-index the (n-1)-vertex mask into the n-vertex pair numbering
        uint32_t lifted = 0;
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j)
                if (base & (1u << pair_index(i, j, n - 1))) lifted |= 1u << pair_index(i, j, n);
        for (uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
            uint32_t mask = lifted;
            for (int i = 0; i < n - 1; ++i)
                if (nb & (1u << i)) mask |= 1u << pair_index(i, n - 1, n);
            cur.insert(canonical(mask, perms, n));
        }
    }
    return cache.emplace(n, std::move(cur)).first->second;
}

// ---- trees via Pruefer sequences + centre-rooted canonical codes ----------------

std::string ahu_code(int v, int parent, const Graph& g) {
    std::vector<std::string> sub;
    for (int u : g.neighbors(v))
        if (u != parent) sub.push_back(ahu_code(u, v, g));
    std::sort(sub.begin(), sub.end());
    std::string out = "(";
    for (auto& s : sub) out += s;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<bool> gone(n, false);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = true;
            --remaining;
            for (int u : g.neighbors(v))
                if (!gone[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_canon(const Graph& g) {
    std::string best;
    for (int c : tree_centers(g)) {
        std::string code = ahu_code(c, -1, g);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

Graph from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph::from_edges(n, edges);
}

}  // namespace

const std::vector<Graph>& connected_graphs(int n) {
    if (n < 1 || n > 7) fail_parameter("connected graph corpus supports n in 1..7");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    for (uint32_t mask : all_classes(n)) {
        Graph g = mask_to_graph(mask, n);
        if (graphcore::metrics(g).is_connected) out.push_back(std::move(g));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Graph>& trees(int n) {
    if (n < 1 || n > 9) fail_parameter("tree corpus supports n in 1..9");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::from_edges(1, {}));
    } else if (n == 2) {
        out.push_back(Graph::from_edges(2, {{0, 1}}));
    } else {
        std::set<std::string> seen;
        std::vector<int> seq(n - 2, 0);
        while (true) {
            Graph t = from_pruefer(seq, n);
            if (seen.insert(tree_canon(t)).second) out.push_back(std::move(t));
            int i = 0;
            while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
            if (i == n - 2) break;
            ++seq[i];
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace cheatbot::corpus
