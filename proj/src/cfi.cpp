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

#include "homind/cfi.hpp"

#include <algorithm>

#include "homind/hom.hpp"

namespace homind {

namespace {

struct GadgetBuild {
    Graph graph;
    std::vector<std::pair<int, std::uint64_t>> index;
};

GadgetBuild build_side(const Graph& base, const std::vector<std::pair<int, int>>& edge_list,
                       int twist_vertex) {
    std::vector<std::uint64_t> incident(std::size_t(base.n), 0);
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        incident[edge_list[e].first] |= std::uint64_t(1) << e;
        incident[edge_list[e].second] |= std::uint64_t(1) << e;
    }
    std::vector<std::pair<int, std::uint64_t>> index;
    for (int v = 0; v < base.n; ++v) {
        int want = v == twist_vertex ? 1 : 0;
        // Subsets of the incident edges with the required parity, ascending.
        std::uint64_t inc = incident[v];
        for (std::uint64_t sub = 0;; sub = (sub - inc) & inc) {
            if ((__builtin_popcountll(sub) & 1) == want) index.emplace_back(v, sub);
            if (sub == inc) break;
        }
    }
    if (int(index.size()) > kMaxVertices)
        throw BudgetError("build_cfi_pair: gadget graph exceeds the vertex bound");
    Graph g(int(index.size()));
    for (std::size_t i = 0; i < index.size(); ++i) {
        for (std::size_t j = i + 1; j < index.size(); ++j) {
            auto [u, s] = index[i];
            auto [w, t] = index[j];
            if (!base.has_edge(u, w)) continue;
            std::uint64_t e = std::uint64_t(1)
                              << std::distance(edge_list.begin(),
                                               std::find(edge_list.begin(), edge_list.end(),
                                                         std::pair{std::min(u, w), std::max(u, w)}));
            if (((s & e) != 0) == ((t & e) != 0)) g.add_edge(int(i), int(j));
        }
    }
    return {g, index};
}

}  // namespace

CFIPair build_cfi_pair(const Graph& base, int twist) {
    if (base.n == 0 || !is_connected(base)) throw PreconditionError("build_cfi_pair: base must be connected");
    for (int v = 0; v < base.n; ++v)
        if (base.degree(v) == 0) throw PreconditionError("build_cfi_pair: base has an isolated vertex");
    if (twist < 0 || twist >= base.n) throw PreconditionError("build_cfi_pair: twist vertex out of range");
    auto edge_list = base.edges();
    if (edge_list.size() > 62) throw BudgetError("build_cfi_pair: too many base edges");
    CFIPair pair;
    pair.base = base;
    pair.twist = twist;
    GadgetBuild even = build_side(base, edge_list, -1);
    GadgetBuild odd = build_side(base, edge_list, twist);
    pair.even = std::move(even.graph);
    pair.even_index = std::move(even.index);
    pair.odd = std::move(odd.graph);
    pair.odd_index = std::move(odd.index);
    return pair;
}

bool cfi_distinguishes(const Graph& f, const CFIPair& pair) {
    try {
        return count_homs(f, pair.even) != count_homs(f, pair.odd);
    } catch (const OverflowError&) {
        return count_homs_big(f, pair.even) != count_homs_big(f, pair.odd);
    }
}

}  // namespace homind
