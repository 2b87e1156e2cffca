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

#include "homind/graph.hpp"

#include <algorithm>
#include <functional>

namespace homind {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer pentagon
        g.add_edge(i, i + 5);             // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph wagner_v8() {
    Graph g(8);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.n + h.n > kMaxVertices) throw PreconditionError("union exceeds the vertex bound");
    Graph out(g.n + h.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask, std::vector<int>* origin) {
    mask &= g.vertex_mask();
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if ((mask >> v) & 1) keep.push_back(v);
    Graph out(int(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(int(i), int(j));
    if (origin) *origin = keep;
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw PreconditionError("contract_edge requires an edge");
    int lo = std::min(u, v), hi = std::max(u, v);
    // Merge hi into lo, then drop hi and renumber densely.
    std::vector<std::uint64_t> rows = g.adj;
    rows[lo] |= rows[hi];
    rows[lo] &= ~((std::uint64_t(1) << lo) | (std::uint64_t(1) << hi));
    for (int w = 0; w < g.n; ++w) {
        if (w == lo || w == hi) continue;
        if ((rows[w] >> hi) & 1) rows[w] |= std::uint64_t(1) << lo;
    }
    Graph out(g.n - 1);
    auto newid = [&](int w) { return w < hi ? w : w - 1; };
    for (int a = 0; a < g.n; ++a) {
        if (a == hi) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (b == hi) continue;
            if ((rows[a] >> b) & 1) out.add_edge(newid(a), newid(b));
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex index out of range");
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t(1) << v));
}

Graph torso(const Graph& g, std::uint64_t x, std::vector<int>* origin) {
    x &= g.vertex_mask();
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if ((x >> v) & 1) keep.push_back(v);
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = int(i);
    Graph out = induced_subgraph(g, x);
    for (std::uint64_t comp : components(g, g.vertex_mask() & ~x)) {
        std::uint64_t nb = 0;
        std::uint64_t rest = comp;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            nb |= g.adj[v];
        }
        nb &= x;
        std::vector<int> border;
        while (nb) {
            int v = __builtin_ctzll(nb);
            nb &= nb - 1;
            border.push_back(pos[v]);
        }
        for (std::size_t i = 0; i < border.size(); ++i)
            for (std::size_t j = i + 1; j < border.size(); ++j) out.add_edge(border[i], border[j]);
    }
    if (origin) *origin = keep;
    return out;
}

Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<int>& s1,
                 const std::vector<int>& s2, const std::vector<std::pair<int, int>>& drop) {
    if (s1.size() != s2.size()) throw PreconditionError("clique_sum: identified sets differ in size");
    auto require_clique = [](const Graph& g, const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j])) throw PreconditionError("clique_sum: identified set is not a clique");
    };
    require_clique(g1, s1);
    require_clique(g2, s2);
    int extra = g2.n - int(s2.size());
    if (g1.n + extra > kMaxVertices) throw PreconditionError("clique_sum exceeds the vertex bound");
    // g1 keeps its labels; g2's non-identified vertices append in order.
    std::vector<int> map2(g2.n, -1);
    for (std::size_t i = 0; i < s2.size(); ++i) {
        if (s2[i] < 0 || s2[i] >= g2.n || map2[s2[i]] != -1)
            throw PreconditionError("clique_sum: bad identified set");
        map2[s2[i]] = s1[i];
    }
    int next = g1.n;
    for (int v = 0; v < g2.n; ++v)
        if (map2[v] == -1) map2[v] = next++;
    Graph out(g1.n + extra);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(map2[u], map2[v]);
    for (auto [i, j] : drop) {
        if (i < 0 || j < 0 || i >= int(s1.size()) || j >= int(s1.size()) || i == j)
            throw PreconditionError("clique_sum: drop pair outside the identified clique");
        out.remove_edge(s1[i], s1[j]);
    }
    return out;
}

std::vector<std::uint64_t> components(const Graph& g, std::uint64_t within) {
    within &= g.vertex_mask();
    std::vector<std::uint64_t> out;
    std::uint64_t left = within;
    while (left) {
        int start = __builtin_ctzll(left);
        std::uint64_t comp = std::uint64_t(1) << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.adj[v] & within & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::vector<std::uint64_t> components(const Graph& g) { return components(g, g.vertex_mask()); }

bool is_connected(const Graph& g) { return g.n <= 1 || components(g).size() == 1; }

bool is_connected_within(const Graph& g, std::uint64_t within) {
    within &= g.vertex_mask();
    if (within == 0) return true;
    return components(g, within).size() == 1;
}

bool is_forest(const Graph& g) {
    auto comps = components(g);
    int m = g.edge_count();
    return m == g.n - int(comps.size());
}

bool is_tree(const Graph& g) { return g.n >= 1 && is_connected(g) && g.edge_count() == g.n - 1; }

std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> out;
    auto base = components(g).size();
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t rest = g.vertex_mask() & ~(std::uint64_t(1) << v);
        if (rest && components(g, rest).size() > base) out.push_back(v);
    }
    return out;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return is_connected(g);
    if (g.n <= k) return false;
    if (!is_connected(g)) return false;
    // Every deletion of fewer than k vertices must leave the rest connected.
    std::vector<int> pick;
    std::function<bool(int, int)> sweep = [&](int start, int remaining) {
        if (remaining == 0) {
            std::uint64_t kill = 0;
            for (int v : pick) kill |= std::uint64_t(1) << v;
            return is_connected_within(g, g.vertex_mask() & ~kill);
        }
        for (int v = start; v < g.n; ++v) {
            pick.push_back(v);
            bool ok = sweep(v + 1, remaining - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 1; size <= k - 1; ++size)
        if (!sweep(0, size)) return false;
    return true;
}

}  // namespace homind
