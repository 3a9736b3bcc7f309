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
#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

#include "error.hpp"

namespace cheatbot::graphcore {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail_parameter("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail_input("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        if (u == v) fail_input("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            fail_input("duplicate edge at vertex " + std::to_string(v));
    }
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

uint64_t Graph::content_hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(n_));
    for (auto [u, v] : edges()) mix((static_cast<uint64_t>(u) << 32) | static_cast<uint64_t>(v));
    return h;
}

// ---- generators ------------------------------------------------------------

Graph path(int n) {
    if (n < 1) fail_parameter("path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    if (n < 3) fail_parameter("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    if (n < 1) fail_parameter("complete requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) fail_parameter("multipartite requires at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) fail_parameter("multipartite parts must each be >= 1");
        n += p;
    }
    std::vector<int> part_of(n);
    int idx = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[idx++] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph hypercube(int d) {
    if (d < 0) fail_parameter("hypercube requires d >= 0");
    if (d > 20) fail_parameter("hypercube dimension too large");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (!(u & (1 << b))) e.emplace_back(u, u | (1 << b));
    return Graph::from_edges(n, e);
}

Graph star(int leaves) {
    if (leaves < 1) fail_parameter("star requires >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph icosahedron() {
    // Apex 0 over pentagon 1..5, apex 11 under pentagon 6..10, antiprism strip.
    std::vector<std::pair<int, int>> e;
    auto up = [](int i) { return 1 + (i % 5); };
    auto lo = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(0, up(i));
        e.emplace_back(11, lo(i));
        e.emplace_back(up(i), up(i + 1));
        e.emplace_back(lo(i), lo(i + 1));
        e.emplace_back(up(i), lo(i));
        e.emplace_back(up(i), lo(i + 1));
    }
    return Graph::from_edges(12, e);
}

Graph ds_hypercube(int d) {
    if (d < 2) fail_parameter("ds-hypercube requires d >= 2");
    return double_subdivision(hypercube(d - 1));
}

// ---- constructions ----------------------------------------------------------

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0 || nh == 0) fail_parameter("product factors must be nonempty");
    auto id = [nh](int u, int v) { return u * nh + v; };
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v)
            for (int x = u; x < ng; ++x)
                for (int y = 0; y < nh; ++y) {
                    int a = id(u, v), b = id(x, y);
                    if (a >= b) continue;
                    bool eg = g.adjacent(u, x), eh = h.adjacent(v, y);
                    bool su = (u == x), sv = (v == y);
                    bool adj = false;
                    switch (kind) {
                        case ProductKind::cartesian: adj = (eg && sv) || (su && eh); break;
                        case ProductKind::strong: adj = (eg && sv) || (su && eh) || (eg && eh); break;
                        case ProductKind::lexicographic: adj = eg || (su && eh); break;
                    }
                    if (adj) e.emplace_back(a, b);
                }
    return Graph::from_edges(ng * nh, e);
}

Graph double_subdivision(const Graph& g) {
    int n = g.vertex_count();
    auto orig = g.edges();  // sorted
    std::vector<std::pair<int, int>> e;
    int next = n;
    for (auto [x, y] : orig) {
        int apex = next++;
        int sub = next++;
        e.emplace_back(x, apex);
        e.emplace_back(y, apex);
        e.emplace_back(x, sub);
        e.emplace_back(y, sub);
    }
    return Graph::from_edges(next, e);
}

// ---- metrics ----------------------------------------------------------------

Metrics metrics(const Graph& g) {
    int n = g.vertex_count();
    Metrics m;
    m.min_degree = g.min_degree();
    if (n == 0) {
        m.is_connected = m.is_tree = m.is_bipartite = true;
        return m;
    }

    // connectivity + 2-colouring in one BFS sweep
    std::vector<int> colour(n, -1);
    int seen = 0;
    bool bip = true;
    std::deque<int> q;
    colour[0] = 0;
    q.push_back(0);
    ++seen;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbors(u)) {
            if (colour[v] < 0) {
                colour[v] = colour[u] ^ 1;
                ++seen;
                q.push_back(v);
            } else if (colour[v] == colour[u]) {
                bip = false;
            }
        }
    }
    m.is_connected = (seen == n);
    m.is_bipartite = bip && m.is_connected;
    if (!m.is_connected) {
        // colour the rest so the bipartite answer covers the whole graph
        for (int s = 0; s < n; ++s) {
            if (colour[s] >= 0) continue;
            colour[s] = 0;
            q.push_back(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : g.neighbors(u)) {
                    if (colour[v] < 0) {
                        colour[v] = colour[u] ^ 1;
                        q.push_back(v);
                    } else if (colour[v] == colour[u]) {
                        bip = false;
                    }
                }
            }
        }
        m.is_bipartite = bip;
    }
    m.is_tree = m.is_connected && g.edge_count() == n - 1;

    // girth: BFS from every vertex, O(nm); fine at desk scale
    int best = -1;
    std::vector<int> dist(n), par(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        par[s] = -1;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else if (v != par[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best >= 0) m.girth = best;
    return m;
}

Degeneracy degeneracy(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) fail_parameter("degeneracy of the empty graph is undefined");
    std::vector<int> deg(n), pos(n), order;
    std::vector<std::vector<int>> bins(g.max_degree() + 1);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pos[v] = static_cast<int>(bins[deg[v]].size());
        bins[deg[v]].push_back(v);
    }
    std::vector<bool> removed(n, false);
    Degeneracy out;
    int b = 0;
    for (int round = 0; round < n; ++round) {
        // after a removal the lowest occupied bin can drop by at most one
        b = std::max(0, b - 1);
        while (bins[b].empty()) ++b;
        int v = bins[b].back();
        bins[b].pop_back();
        removed[v] = true;
        out.k = std::max(out.k, b);
        out.peel_order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            auto& src = bins[deg[u]];
            int p = pos[u];
            std::swap(src[p], src.back());
            pos[src[p]] = p;
            src.pop_back();
            --deg[u];
            pos[u] = static_cast<int>(bins[deg[u]].size());
            bins[deg[u]].push_back(u);
        }
    }
    return out;
}

// ---- serialization -----------------------------------------------------------

Graph parse_edgelist(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    int lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> tok;
        long long x;
        while (ls >> x) tok.push_back(x);
        if (!ls.eof()) fail_input("line " + std::to_string(lineno) + ": malformed token");
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 1 || tok[0] < 0) fail_input("line " + std::to_string(lineno) + ": expected vertex count");
            n = static_cast<int>(tok[0]);
            continue;
        }
        if (tok.size() != 2) fail_input("line " + std::to_string(lineno) + ": expected 'u v'");
        long long u = tok[0], v = tok[1];
        if (u == v) fail_input("line " + std::to_string(lineno) + ": self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) fail_input("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u > v) fail_input("line " + std::to_string(lineno) + ": edges must be written u v with u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) fail_input("missing vertex count");
    std::vector<std::pair<int, int>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail_input("duplicate edge");
    return Graph::from_edges(n, edges);
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g, const DotAnnotations* ann) {
    std::ostringstream out;
    out << "graph {\n";
    if (ann && !ann->title.empty()) out << "  label=\"" << ann->title << "\";\n";
    std::vector<int> copcount(g.vertex_count(), 0);
    std::vector<bool> pushed(g.vertex_count(), false);
    if (ann) {
        for (int c : ann->cops)
            if (c >= 0 && c < g.vertex_count()) ++copcount[c];
        for (int p : ann->pushers)
            if (p >= 0 && p < g.vertex_count()) pushed[p] = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        std::string label = std::to_string(v);
        std::string extra;
        if (copcount[v] > 0) {
            label += " C";
            if (copcount[v] > 1) label += "x" + std::to_string(copcount[v]);
            extra = pushed[v] ? ", style=filled, fillcolor=orange" : ", style=filled, fillcolor=lightblue";
        }
        if (ann && ann->robber && *ann->robber == v) {
            label += " R";
            extra = ", style=filled, fillcolor=salmon";
        }
        out << " [label=\"" << label << "\"" << extra << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph generate_spec(const std::string& spec) {
    std::string name = spec;
    std::vector<int> args;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::istringstream rs(rest);
        std::string piece;
        while (std::getline(rs, piece, ',')) {
            try {
                args.push_back(std::stoi(piece));
            } catch (...) {
                fail_parameter("bad family parameter '" + piece + "' in '" + spec + "'");
            }
        }
    }
    auto need = [&](size_t c) {
        if (args.size() != c)
            fail_parameter("family '" + name + "' expects " + std::to_string(c) + " parameter(s)");
    };
    if (name == "path") { need(1); return path(args[0]); }
    if (name == "cycle") { need(1); return cycle(args[0]); }
    if (name == "complete") { need(1); return complete(args[0]); }
    if (name == "star") { need(1); return star(args[0]); }
    if (name == "hypercube") { need(1); return hypercube(args[0]); }
    if (name == "multipartite" || name == "complete-multipartite") {
        if (args.empty()) fail_parameter("multipartite needs part sizes");
        return complete_multipartite(args);
    }
    if (name == "icosahedron") { need(0); return icosahedron(); }
    if (name == "ds-hypercube" || name == "ds_hypercube") { need(1); return ds_hypercube(args[0]); }
    if (name == "ds-icosahedron") { need(0); return double_subdivision(icosahedron()); }
    fail_parameter("unknown graph family '" + name + "'");
}

}  // namespace cheatbot::graphcore
