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

#include "homind/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace homind {

namespace {

// Iteratively splits colour classes by the multiset of neighbour colours.
// The renumbering sorts signatures, so equal inputs up to isomorphism refine
// to equal colour sequences up to the same isomorphism.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::uint64_t nb = g.adj[v];
            while (nb) {
                int w = __builtin_ctzll(nb);
                nb &= nb - 1;
                s.push_back(color[w]);
            }
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sorted)
            rank.emplace(s, int(rank.size()));
        int before = 0;
        for (int c : color) before = std::max(before, c + 1);
        for (int v = 0; v < g.n; ++v) color[v] = rank[sig[v].first];
        if (int(rank.size()) == before) return color;
    }
}

std::string leaf_certificate(const Graph& g, const std::vector<int>& base_color,
                             const std::vector<int>& order) {
    std::string cert;
    cert.push_back(char(g.n));
    for (int v : order) cert.push_back(char(base_color[v]));
    std::size_t bits = std::size_t(g.n) * (g.n - 1) / 2;
    std::string packed((bits + 7) / 8, '\0');
    std::size_t k = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++k)
            if (g.has_edge(order[i], order[j])) packed[k / 8] |= char(1 << (7 - k % 8));
    cert += packed;
    return cert;
}

struct Search {
    const Graph& g;
    const std::vector<int>& base_color;
    std::string best;
    std::vector<int> best_order;
    std::vector<std::vector<int>> automorphisms;

    Search(const Graph& graph, const std::vector<int>& colors) : g(graph), base_color(colors) {}

    // First colour class with more than one vertex, or empty.
    std::vector<int> branch_cell(const std::vector<int>& color) const {
        std::vector<int> cell;
        for (int c = 0;; ++c) {
            cell.clear();
            for (int v = 0; v < g.n; ++v)
                if (color[v] == c) cell.push_back(v);
            if (cell.empty()) return {};
            if (cell.size() > 1) return cell;
        }
    }

    void run(std::vector<int> color, std::vector<int>& prefix) {
        color = refine(g, std::move(color));
        std::vector<int> cell = branch_cell(color);
        if (cell.empty()) {
            std::vector<int> order(g.n);
            for (int v = 0; v < g.n; ++v) order[color[v]] = v;
            std::string cert = leaf_certificate(g, base_color, order);
            if (best.empty() || cert > best) {
                best = cert;
                best_order = order;
            } else if (cert == best) {
                // Equal leaves witness an automorphism mapping best_order onto
                // this order position by position.
                std::vector<int> sigma(g.n);
                for (int i = 0; i < g.n; ++i) sigma[best_order[i]] = order[i];
                automorphisms.push_back(std::move(sigma));
            }
            return;
        }
        // Orbit pruning: discovered automorphisms fixing every individualized
        // vertex map whole subtrees onto each other.
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto& sigma : automorphisms) {
            bool fixes = true;
            for (int v : prefix)
                if (sigma[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.n; ++v) unite(v, sigma[v]);
        }
        std::vector<int> processed;
        for (int v : cell) {
            bool skip = false;
            for (int u : processed)
                if (find(u) == find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            processed.push_back(v);
            std::vector<int> next = color;
            int fresh = 0;
            for (int c : color) fresh = std::max(fresh, c + 1);
            next[v] = fresh;
            std::size_t known = automorphisms.size();
            prefix.push_back(v);
            run(std::move(next), prefix);
            prefix.pop_back();
            // Automorphisms found inside the subtree may merge later orbits.
            for (std::size_t i = known; i < automorphisms.size(); ++i) {
                const auto& sigma = automorphisms[i];
                bool fixes = true;
                for (int u : prefix)
                    if (sigma[u] != u) {
                        fixes = false;
                        break;
                    }
                if (fixes)
                    for (int u = 0; u < g.n; ++u) unite(u, sigma[u]);
            }
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors, int max_order) {
    if (g.n > max_order) throw BudgetError("canonical_form: order exceeds the configured cap");
    std::vector<int> base = colors;
    if (base.empty()) base.assign(std::size_t(g.n), 0);
    if (int(base.size()) != g.n) throw PreconditionError("canonical_form: colour list length mismatch");
    for (int c : base)
        if (c < 0 || c > 127) throw PreconditionError("canonical_form: colours must fit in a byte");
    if (g.n == 0) return {std::string(1, '\0'), {}};
    Search search(g, base);
    std::vector<int> prefix;
    search.run(base, prefix);
    return {search.best, search.best_order};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g).certificate == canonical_form(h).certificate;
}

}  // namespace homind
