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

#ifndef HOMIND_GRAPH_HPP
#define HOMIND_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "homind/util.hpp"

namespace homind {

// Largest representable order: vertex sets are single 64-bit masks and the
// graph6 short form stops at 62.
inline constexpr int kMaxVertices = 62;

// Simple undirected loopless graph on vertices 0..n-1, adjacency as bitmask
// rows (bit v of adj[u] set iff uv is an edge).
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order, 0) {
        if (order < 0 || order > kMaxVertices) throw PreconditionError("graph order out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("loops are not representable");
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj[u] &= ~(std::uint64_t(1) << v);
        adj[v] &= ~(std::uint64_t(1) << u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj[u] >> v) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        return __builtin_popcountll(adj[v]);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += __builtin_popcountll(adj[v]);
        return twice / 2;
    }

    // Edges as ordered pairs u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u) {
            std::uint64_t rest = adj[u] >> (u + 1) << (u + 1);
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    std::uint64_t vertex_mask() const {
        return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw PreconditionError("vertex index out of range");
    }
};

// ---- constructors for named graphs ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}, centre is vertex 0
Graph petersen_graph();
// 8-cycle 0..7 plus the four diameters i,i+4.
Graph wagner_v8();

// ---- structural operations ----

Graph disjoint_union(const Graph& g, const Graph& h);

// Induced subgraph on the set bits of mask, relabelled densely in increasing
// vertex order. If origin is non-null it receives new-index -> old-index.
Graph induced_subgraph(const Graph& g, std::uint64_t mask, std::vector<int>* origin = nullptr);

// Contracts edge uv: endpoints merge into min(u,v), parallel edges collapse,
// the loop disappears, vertices renumber densely. Order drops by one.
Graph contract_edge(const Graph& g, int u, int v);

// Deletes one vertex, renumbering densely.
Graph delete_vertex(const Graph& g, int v);

// Induced graph on x plus a clique on N(C) for every component C of g - x.
// Vertices relabelled densely in increasing order of x members.
Graph torso(const Graph& g, std::uint64_t x, std::vector<int>* origin = nullptr);

// Glues g1 and g2 by identifying s1[i] with s2[i]; both must induce cliques.
// drop lists edges inside the identified clique to delete afterwards, given
// as index pairs into s1. Empty s1/s2 is the disjoint union.
Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<int>& s1,
                 const std::vector<int>& s2, const std::vector<std::pair<int, int>>& drop = {});

// ---- connectivity ----

// Connected components as vertex masks, each discovered from its smallest
// vertex, restricted to `within` (defaults to all vertices).
std::vector<std::uint64_t> components(const Graph& g, std::uint64_t within);
std::vector<std::uint64_t> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected_within(const Graph& g, std::uint64_t within);

// Vertices whose removal disconnects their component.
std::vector<int> cut_vertices(const Graph& g);

// True when the graph stays connected after deleting any k-1 vertices and has
// more than k vertices (so K_{n} counts as (n-1)-connected, not more).
bool is_k_connected(const Graph& g, int k);

}  // namespace homind

#endif
