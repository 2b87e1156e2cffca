// Copyright 2026 The homind authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "homind/family.hpp"
#include "homind/graph.hpp"
#include "homind/graph6.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

// Independent reference encoder: order byte, then the upper triangle in
// column-major order, six bits per byte, all offset by 63.
std::string reference_graph6(const Graph& g) {
    std::string out;
    out.push_back(char(63 + g.n));
    std::vector<int> bits;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out.push_back(char(63 + value));
    }
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) g.add_edge(u, v);
    return g;
}

TEST_SUITE("graph") {

TEST_CASE("named constructions have the right shape") {
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(star_graph(3).edge_count() == 3);
    CHECK(star_graph(3).max_degree() == 3);
    CHECK(petersen_graph().n == 10);
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(petersen_graph().max_degree() == 3);
    Graph v8 = wagner_v8();
    CHECK(v8.n == 8);
    CHECK(v8.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(std::popcount(v8.adj[v]) == 3);
    CHECK(v8.has_edge(0, 4));
    CHECK(v8.has_edge(1, 5));
    CHECK(v8.has_edge(2, 6));
    CHECK(v8.has_edge(3, 7));
    CHECK(v8.has_edge(0, 1));
    CHECK(v8.has_edge(7, 0));
}

TEST_CASE("edge bookkeeping") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    g.remove_edge(1, 0);
    CHECK(!g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
    CHECK_THROWS_AS(Graph(63), PreconditionError);
}

TEST_CASE("graph6 matches the reference encoder") {
    CHECK(encode_graph6(Graph(1)) == "@");
    Graph k2(2);
    CHECK(encode_graph6(k2) == "A?");
    k2.add_edge(0, 1);
    CHECK(encode_graph6(k2) == "A_");
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    for (const Graph& g : enumerate_graphs(5)) CHECK(encode_graph6(g) == reference_graph6(g));
    std::mt19937_64 rng(kDefaultSeed);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, int(rng() % 21));
        std::string code = encode_graph6(g);
        CHECK(code == reference_graph6(g));
        Graph back = decode_graph6(code);
        CHECK(back.n == g.n);
        CHECK(back.adj == g.adj);
    }
}

TEST_CASE("graph6 decode accepts the optional prefix and flags bad bytes") {
    Graph k3 = decode_graph6(">>graph6<<Bw");
    CHECK(k3.n == 3);
    CHECK(k3.edge_count() == 3);
    CHECK_THROWS_AS(decode_graph6("B"), ParseError);
    CHECK_THROWS_AS(decode_graph6("B!!"), ParseError);
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    std::vector<Graph> list = decode_graph6_lines("@\nA_\n\nBw\n");
    CHECK(list.size() == 3);
    CHECK(list[1].edge_count() == 1);
}

TEST_CASE("induced subgraphs, deletions, contractions") {
    Graph c4 = cycle_graph(4);
    std::vector<int> origin;
    Graph p3 = induced_subgraph(c4, 0b0111, &origin);
    CHECK(p3.n == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(origin == std::vector<int>{0, 1, 2});
    CHECK(delete_vertex(c4, 0).edge_count() == 2);
    Graph tri = contract_edge(c4, 0, 1);
    CHECK(tri.n == 3);
    CHECK(tri.edge_count() == 3);
    Graph k4 = complete_graph(4);
    Graph k3 = contract_edge(k4, 2, 3);
    CHECK(k3.n == 3);
    CHECK(k3.edge_count() == 3);
}

TEST_CASE("components, trees, cut vertices, connectivity") {
    Graph two = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK(components(two).size() == 2);
    CHECK(components(two, two.vertex_mask()).size() == 2);
    CHECK(!is_connected(two));
    CHECK(is_tree(path_graph(4)));
    CHECK(!is_tree(cycle_graph(4)));
    CHECK(is_forest(disjoint_union(path_graph(2), path_graph(3))));
    CHECK(cut_vertices(path_graph(4)) == std::vector<int>{1, 2});
    CHECK(cut_vertices(cycle_graph(4)).empty());
    CHECK(is_k_connected(cycle_graph(4), 2));
    CHECK(!is_k_connected(cycle_graph(4), 3));
    CHECK(is_k_connected(complete_graph(5), 4));
    CHECK(!is_k_connected(path_graph(2), 2));
}

TEST_CASE("components are reported ascending by smallest vertex") {
    Graph g(5);
    g.add_edge(1, 3);
    std::vector<std::uint64_t> comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == 0b00001);
    CHECK(comps[1] == 0b01010);
    CHECK(comps[2] == 0b00100);
    CHECK(comps[3] == 0b10000);
}

TEST_CASE("torso completes component neighbourhoods") {
    // Path 0-1-2-3: torso on {0,3} joins them through the middle component.
    Graph p4 = path_graph(4);
    std::vector<int> origin;
    Graph t = torso(p4, 0b1001, &origin);
    CHECK(t.n == 2);
    CHECK(t.has_edge(0, 1));
    CHECK(origin == std::vector<int>{0, 3});
    // Star centre plus two leaves: leaves stay non-adjacent.
    Graph s = star_graph(3);
    Graph leaves = torso(s, 0b0110);
    CHECK(leaves.edge_count() == 1);
}

TEST_CASE("clique sums glue along cliques") {
    Graph k3 = complete_graph(3);
    Graph sum = clique_sum(k3, k3, {0, 1}, {0, 1});
    CHECK(sum.n == 4);
    CHECK(sum.edge_count() == 5);
    CHECK_THROWS_AS(clique_sum(path_graph(3), path_graph(3), {0, 2}, {0, 2}), PreconditionError);
}

}  // TEST_SUITE

}  // namespace
