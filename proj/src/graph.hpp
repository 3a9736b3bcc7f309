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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cheatbot::graphcore {

/**
 * Immutable simple undirected graph. Vertices are 0..n-1 and every adjacency
 * list is sorted ascending, so structural equality is plain vector equality.
 * All operations in this namespace are pure; Graph values can be shared
 * freely across threads.
 */
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list, validating simplicity (no loops, no duplicates).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    int min_degree() const;
    int max_degree() const;

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    /// FNV-1a over n and the sorted edge list; stable across runs and platforms.
    uint64_t content_hash() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// ---- named generators ----------------------------------------------------

Graph path(int n);                                        // n >= 1
Graph cycle(int n);                                       // n >= 3
Graph complete(int n);                                    // n >= 1
Graph complete_multipartite(const std::vector<int>& parts);  // each part >= 1
Graph hypercube(int d);                                   // d >= 0, binary-code labels
Graph star(int leaves);                                   // K_{1,leaves}, centre 0
Graph icosahedron();                                      // 12 vertices, 5-regular
Graph ds_hypercube(int d);                                // DS(Q_{d-1}), d >= 2

// ---- constructions -------------------------------------------------------

enum class ProductKind { cartesian, strong, lexicographic };

/// Product on V(g) x V(h); (u,v) is labelled u*|V(h)|+v (row-major).
Graph product(const Graph& g, const Graph& h, ProductKind kind);

/**
 * Replaces every edge xy by a 4-cycle: the edge is removed and two new
 * vertices adjacent to both x and y are appended. Original vertices keep
 * their indices; per edge (in sorted edge order) the apex vertex comes
 * before the subdivision vertex, so indices are reproducible.
 */
Graph double_subdivision(const Graph& g);

// ---- structural metrics ---------------------------------------------------

struct Metrics {
    bool is_tree = false;
    bool is_bipartite = false;
    bool is_connected = false;
    int min_degree = 0;
    std::optional<int> girth;  // empty for forests
};
Metrics metrics(const Graph& g);

struct Degeneracy {
    int k = 0;                    // largest k such that a k-core exists
    std::vector<int> peel_order;  // witness elimination order
};

/// Bucketed min-degree peeling; linear in n + m.
Degeneracy degeneracy(const Graph& g);

// ---- serialization ---------------------------------------------------------

/**
 * Edge-list text format: '#' starts a comment to end of line, the first
 * non-comment token is the vertex count, every following line is "u v"
 * with 0 <= u < v < n. Duplicates (in either orientation) are errors.
 */
Graph parse_edgelist(const std::string& text);
std::string serialize_edgelist(const Graph& g);

struct DotAnnotations {
    std::vector<int> cops;     // cop-occupied vertices (repeats allowed)
    std::optional<int> robber;
    std::vector<int> pushers;  // highlighted cop vertices
    std::string title;
};
std::string to_dot(const Graph& g, const DotAnnotations* ann = nullptr);

/**
 * Parses a compact family spec like "cycle:5", "multipartite:2,2,2",
 * "icosahedron" or "ds-hypercube:3". Used by the CLI and by fixtures.
 */
Graph generate_spec(const std::string& spec);

}  // namespace cheatbot::graphcore
