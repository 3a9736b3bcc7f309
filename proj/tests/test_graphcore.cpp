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

#include <fstream>
#include <random>
#include <set>

#include "corpus.hpp"
#include "error.hpp"
#include "graph.hpp"

using namespace cheatbot;
using namespace cheatbot::graphcore;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(CHEATBOT_FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void check_simple_and_symmetric(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int prev = -1;
        for (int u : g.neighbors(v)) {
            CHECK(u != v);
            CHECK(u > prev);  // sorted ascending, no duplicates
            prev = u;
            CHECK(g.adjacent(u, v));
        }
    }
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("generators produce the named graphs") {
    Graph c5 = cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    int adj_entries = 0;
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.degree(v) == 2);
        adj_entries += c5.degree(v);
    }
    CHECK(adj_entries == 10);

    Graph ico = icosahedron();
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    check_simple_and_symmetric(ico);

    // DS(Q_{d-1}): Q_2 has 4 vertices and 4 edges, so d=3 gives 4 + 2*4
    CHECK(ds_hypercube(3).vertex_count() == 12);
    // Q_3 has 8 vertices and 12 edges: 8 + 2*12
    CHECK(ds_hypercube(4).vertex_count() == 32);
    CHECK(ds_hypercube(2) == double_subdivision(path(2)));

    CHECK(complete(4).edge_count() == 6);
    CHECK(star(3).vertex_count() == 4);
    CHECK(complete_multipartite({2, 3}).edge_count() == 6);
    CHECK(complete_multipartite({2, 2, 2}).edge_count() == 12);
    CHECK(hypercube(0).vertex_count() == 1);
    CHECK(hypercube(3).edge_count() == 12);

    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(path(0), Error);
    CHECK_THROWS_AS(ds_hypercube(1), Error);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), Error);
}

TEST_CASE("products match an independent edge predicate") {
    // strong = cartesian union tensor, checked pairwise on assorted factors
    std::mt19937 rng(7);
    std::vector<Graph> factors{path(3), cycle(4), complete(3), star(3), random_graph(5, 0.5, rng)};
    for (const Graph& g : factors) {
        for (const Graph& h : factors) {
            if (g.vertex_count() * h.vertex_count() > 40) continue;
            Graph st = product(g, h, ProductKind::strong);
            Graph ca = product(g, h, ProductKind::cartesian);
            Graph le = product(g, h, ProductKind::lexicographic);
            check_simple_and_symmetric(st);
            int nh = h.vertex_count();
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = 0; v < nh; ++v)
                    for (int x = 0; x < g.vertex_count(); ++x)
                        for (int y = 0; y < nh; ++y) {
                            if (u == x && v == y) continue;
                            bool eg = g.adjacent(u, x), eh = h.adjacent(v, y);
                            bool tensor = eg && eh;
                            bool cart = (eg && v == y) || (u == x && eh);
                            CHECK(st.adjacent(u * nh + v, x * nh + y) == (cart || tensor));
                            CHECK(ca.adjacent(u * nh + v, x * nh + y) == cart);
                            CHECK(le.adjacent(u * nh + v, x * nh + y) == (eg || (u == x && eh)));
                        }
        }
    }

    CHECK(product(cycle(3), cycle(3), ProductKind::strong) == complete(9));
    CHECK(product(path(2), path(2), ProductKind::lexicographic) == complete(4));
    CHECK(product(path(2), path(2), ProductKind::cartesian) == cycle(4));
}

TEST_CASE("double subdivision structure") {
    CHECK(double_subdivision(path(2)) == cycle(4));

    Graph d3 = double_subdivision(cycle(3));
    CHECK(d3.vertex_count() == 9);
    CHECK(d3.edge_count() == 12);
    for (int v = 0; v < 3; ++v) CHECK(d3.degree(v) == 4);

    Graph dsi = double_subdivision(icosahedron());
    CHECK(dsi.vertex_count() == 72);
    for (int v = 0; v < 12; ++v) CHECK(dsi.degree(v) == 10);
    CHECK(metrics(dsi).is_bipartite);

    // |V| = n + 2m, |E| = 4m, bipartite, and no vertex adjacent to three originals
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_graph(n, 0.4, rng);
        Graph d = double_subdivision(g);
        CHECK(d.vertex_count() == n + 2 * g.edge_count());
        CHECK(d.edge_count() == 4 * g.edge_count());
        CHECK(metrics(d).is_bipartite);
        for (int v = 0; v < d.vertex_count(); ++v) {
            int originals = 0;
            for (int u : d.neighbors(v))
                if (u < n) ++originals;
            CHECK(originals <= 2);
        }
        // original edges are gone
        for (auto [x, y] : g.edges()) CHECK(!d.adjacent(x, y));
    }
}

TEST_CASE("degeneracy by peeling") {
    CHECK(degeneracy(complete(5)).k == 4);
    for (int n = 2; n <= 8; ++n)
        for (const Graph& t : corpus::trees(n)) CHECK(degeneracy(t).k == 1);
    CHECK(degeneracy(ds_hypercube(2)).k == 2);
    CHECK(degeneracy(ds_hypercube(3)).k == 2);
    CHECK(degeneracy(ds_hypercube(4)).k == 2);

    // witness order: at removal time the residual degree never exceeds k
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.45, rng);
        auto d = degeneracy(g);
        CHECK(d.k >= g.min_degree());
        std::vector<bool> removed(g.vertex_count(), false);
        for (int v : d.peel_order) {
            int residual = 0;
            for (int u : g.neighbors(v))
                if (!removed[u]) ++residual;
            CHECK(residual <= d.k);
            removed[v] = true;
        }
    }
}

TEST_CASE("metrics") {
    auto p7 = metrics(path(7));
    CHECK(p7.is_tree);
    CHECK(!p7.girth.has_value());

    Graph heawood = parse_edgelist(fixture("heawood.edges"));
    auto hm = metrics(heawood);
    CHECK(heawood.vertex_count() == 14);
    CHECK(hm.min_degree == 3);
    CHECK(heawood.max_degree() == 3);
    CHECK(hm.girth == 6);
    CHECK(hm.is_bipartite);

    CHECK(metrics(cycle(5)).girth == 5);
    CHECK(metrics(complete(4)).girth == 3);
    CHECK(!metrics(Graph::from_edges(4, {{0, 1}, {2, 3}})).is_connected);
}

TEST_CASE("edge list round trips and rejects malformed input") {
    Graph p3 = parse_edgelist("3\n0 1\n1 2\n");
    CHECK(p3 == path(3));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
        CHECK(parse_edgelist(serialize_edgelist(g)) == g);
    }
    std::string normalized = serialize_edgelist(cycle(6));
    CHECK(serialize_edgelist(parse_edgelist(normalized)) == normalized);

    CHECK_THROWS_AS(parse_edgelist("2\n0 0\n"), Error);       // self-loop
    CHECK_THROWS_AS(parse_edgelist("2\n0 1\n0 1\n"), Error);  // duplicate
    CHECK_THROWS_AS(parse_edgelist("3\n0 1\n1 0\n"), Error);  // reversed duplicate
    CHECK_THROWS_AS(parse_edgelist("2\n0 3\n"), Error);       // out of range
    CHECK_THROWS_AS(parse_edgelist("2\nx y\n"), Error);       // malformed
    CHECK_THROWS_AS(parse_edgelist("# only a comment\n"), Error);
    CHECK(parse_edgelist("# c\n3 # count\n0 1\n# mid\n1 2\n") == path(3));
}

TEST_CASE("dot export") {
    DotAnnotations ann;
    ann.cops = {0, 0, 2};
    ann.robber = 1;
    std::string dot = to_dot(path(3), &ann);
    CHECK(dot.find("graph {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("Cx2") != std::string::npos);
    CHECK(dot.find("R") != std::string::npos);
}

TEST_CASE("family specs") {
    CHECK(generate_spec("cycle:5") == cycle(5));
    CHECK(generate_spec("multipartite:2,2,2") == complete_multipartite({2, 2, 2}));
    CHECK(generate_spec("ds-icosahedron").vertex_count() == 72);
    CHECK_THROWS_AS(generate_spec("blob:3"), Error);
    CHECK_THROWS_AS(generate_spec("cycle:abc"), Error);
}

TEST_CASE("small-graph corpus has the known class counts") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto& gs = corpus::connected_graphs(n);
        CHECK(static_cast<int>(gs.size()) == expected[n]);
        for (const Graph& g : gs) {
            CHECK(g.vertex_count() == n);
            CHECK(metrics(g).is_connected);
        }
    }
    const int tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) CHECK(static_cast<int>(corpus::trees(n).size()) == tree_counts[n]);
}

TEST_CASE("content hash is stable and edge-sensitive") {
    CHECK(cycle(5).content_hash() == cycle(5).content_hash());
    CHECK(cycle(5).content_hash() != path(5).content_hash());
}
