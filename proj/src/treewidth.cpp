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

#include "homind/treewidth.hpp"

#include <algorithm>

namespace homind {

int TreeDecomposition::width() const {
    int w = -1;
    for (std::uint64_t b : bags) w = std::max(w, __builtin_popcountll(b) - 1);
    return w;
}

bool TreeDecomposition::valid() const {
    if (!is_tree(tree)) return false;
    if (int(bags.size()) != tree.n) return false;
    std::uint64_t all = 0;
    for (std::uint64_t b : bags) {
        if (b & ~subject.vertex_mask()) return false;
        all |= b;
    }
    if (all != subject.vertex_mask()) return false;
    for (auto [u, v] : subject.edges()) {
        bool covered = false;
        for (std::uint64_t b : bags)
            if (((b >> u) & 1) && ((b >> v) & 1)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    for (int v = 0; v < subject.n; ++v) {
        std::uint64_t nodes = 0;
        for (std::size_t t = 0; t < bags.size(); ++t)
            if ((bags[t] >> v) & 1) nodes |= std::uint64_t(1) << t;
        if (nodes == 0) return false;
        if (!is_connected_within(tree, nodes)) return false;
    }
    return true;
}

int decomposition_weight(const TreeDecomposition& d) {
    int w = 0;
    for (std::uint64_t b : d.bags) {
        int s = __builtin_popcountll(b);
        w += s * s;
    }
    return w;
}

namespace {

// Vertices outside S ∪ {v} reachable from v through S. Eliminating v after S
// turns exactly this set into v's bag mates.
std::uint64_t fill_neighbours(const Graph& g, std::uint64_t s, int v) {
    std::uint64_t comp = std::uint64_t(1) << v;
    std::uint64_t frontier = comp;
    std::uint64_t inside = s | comp;
    std::uint64_t reached = g.adj[v];
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int w = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.adj[w];
        }
        reached |= next;
        next &= inside & ~comp;
        comp |= next;
        frontier = next;
    }
    return reached & ~inside;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<int>& order) {
    TreeDecomposition d;
    d.subject = g;
    if (g.n == 0) {
        d.tree = Graph(1);
        d.bags = {0};
        return d;
    }
    std::vector<int> position(g.n);
    for (int i = 0; i < g.n; ++i) position[order[i]] = i;
    // Fill graph: eliminating a vertex cliques its not-yet-eliminated
    // neighbours.
    std::vector<std::uint64_t> fill = g.adj;
    std::vector<std::uint64_t> bag(g.n);
    std::vector<int> parent(g.n, -1);
    for (int i = 0; i < g.n; ++i) {
        int v = order[i];
        std::uint64_t later = 0;
        for (int j = i + 1; j < g.n; ++j) later |= std::uint64_t(1) << order[j];
        std::uint64_t mates = fill[v] & later;
        bag[i] = mates | (std::uint64_t(1) << v);
        std::uint64_t rest = mates;
        while (rest) {
            int a = __builtin_ctzll(rest);
            rest &= rest - 1;
            fill[a] |= mates & ~(std::uint64_t(1) << a);
        }
        if (mates) {
            int best = -1;
            std::uint64_t m = mates;
            while (m) {
                int a = __builtin_ctzll(m);
                m &= m - 1;
                if (best == -1 || position[a] < position[best]) best = a;
            }
            parent[i] = position[best];
        }
    }
    d.tree = Graph(g.n);
    d.bags = bag;
    for (int i = 0; i < g.n; ++i) {
        if (parent[i] != -1)
            d.tree.add_edge(i, parent[i]);
        else if (i != g.n - 1)
            d.tree.add_edge(i, g.n - 1);  // joins components; empty adhesion
    }
    return d;
}

}  // namespace

std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, int max_order) {
    if (g.n > max_order) throw BudgetError("exact_treewidth: order exceeds the configured cap");
    if (g.n == 0) return {-1, decomposition_from_ordering(g, {})};
    std::uint64_t full = g.vertex_mask();
    std::vector<signed char> dp(std::size_t(1) << g.n, 0);
    std::vector<signed char> choice(std::size_t(1) << g.n, -1);
    dp[0] = -1;
    for (std::uint64_t s = 1; s <= full; ++s) {
        int best = g.n;  // width never exceeds n-1
        int pick = -1;
        std::uint64_t rest = s;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            std::uint64_t prev = s & ~(std::uint64_t(1) << v);
            int cost = std::max<int>(dp[prev], __builtin_popcountll(fill_neighbours(g, prev, v)));
            if (cost < best) {
                best = cost;
                pick = v;
            }
        }
        dp[s] = static_cast<signed char>(best);
        choice[s] = static_cast<signed char>(pick);
    }
    std::vector<int> order(g.n);
    std::uint64_t s = full;
    for (int i = g.n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = v;
        s &= ~(std::uint64_t(1) << v);
    }
    return {dp[full], decomposition_from_ordering(g, order)};
}

int find_noncut_low_degree_vertex(const Graph& g, int k) {
    if (!is_connected(g)) throw PreconditionError("find_noncut_low_degree_vertex: graph not connected");
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) > k) continue;
        std::uint64_t rest = g.vertex_mask() & ~(std::uint64_t(1) << v);
        if (rest == 0 || is_connected_within(g, rest)) return v;
    }
    throw PreconditionError("find_noncut_low_degree_vertex: no such vertex; treewidth bound violated");
}

}  // namespace homind
