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

#include "homind/bilabelled.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "homind/canonical.hpp"

namespace homind {

namespace {

// Quotient of the disjoint union of s1 and s2 under the given vertex
// identifications, vertices renumbered by smallest pre-image. Throws if an
// edge collapses to a loop.
BilabelledGraph glue(const BilabelledGraph& s1, const BilabelledGraph& s2,
                     const std::vector<std::pair<int, int>>& identify, int out_u, int out_v) {
    int n1 = s1.graph.n, n2 = s2.graph.n;
    std::vector<int> parent(std::size_t(n1 + n2));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : identify) parent[find(a)] = find(b);
    std::vector<int> id(std::size_t(n1 + n2), -1);
    int count = 0;
    for (int v = 0; v < n1 + n2; ++v)
        if (id[find(v)] == -1) id[find(v)] = count++;
    if (count > kMaxVertices) throw PreconditionError("bilabelled composition exceeds the vertex bound");
    Graph g(count);
    auto add = [&](int a, int b) {
        int x = id[find(a)], y = id[find(b)];
        if (x == y) throw PreconditionError("bilabelled composition would create a loop");
        g.add_edge(x, y);
    };
    for (auto [a, b] : s1.graph.edges()) add(a, b);
    for (auto [a, b] : s2.graph.edges()) add(n1 + a, n1 + b);
    return BilabelledGraph(g, id[find(out_u)], id[find(out_v)]);
}

}  // namespace

BilabelledGraph::BilabelledGraph(Graph g, int u, int v) : graph(std::move(g)), label_u(u), label_v(v) {
    if (u < 0 || u >= graph.n || v < 0 || v >= graph.n)
        throw PreconditionError("bilabelled labels out of range");
}

BilabelledGraph atom_I() { return BilabelledGraph(Graph(1), 0, 0); }

BilabelledGraph atom_A() {
    Graph g(2);
    g.add_edge(0, 1);
    return BilabelledGraph(g, 0, 1);
}

BilabelledGraph atom_J() { return BilabelledGraph(Graph(2), 0, 1); }

BilabelledGraph parallel(const BilabelledGraph& s1, const BilabelledGraph& s2) {
    int n1 = s1.graph.n;
    return glue(s1, s2, {{s1.label_u, n1 + s2.label_u}, {s1.label_v, n1 + s2.label_v}},
                s1.label_u, s1.label_v);
}

BilabelledGraph series(const BilabelledGraph& s1, const BilabelledGraph& s2) {
    int n1 = s1.graph.n;
    return glue(s1, s2, {{s1.label_v, n1 + s2.label_u}}, s1.label_u, n1 + s2.label_v);
}

Graph soe_graph(const BilabelledGraph& s) { return s.graph; }

HomMatrix hom_matrix(const BilabelledGraph& s, const Graph& g, double budget) {
    if (std::pow(double(std::max(g.n, 1)), double(s.graph.n)) > budget)
        throw BudgetError("hom_matrix: enumeration exceeds the budget");
    HomMatrix m;
    m.target = g;
    m.entries.assign(std::size_t(g.n), std::vector<BigInt>(std::size_t(g.n), BigInt(0)));
    for_each_hom(s.graph, g, [&](const std::vector<int>& map) {
        m.entries[map[s.label_u]][map[s.label_v]] += 1;
        return true;
    });
    return m;
}

std::string labelled_certificate(const BilabelledGraph& s) {
    std::vector<int> colors(std::size_t(s.graph.n), 0);
    colors[s.label_u] = 1;
    colors[s.label_v] = 2;  // overwrites when labels coincide; still faithful
    if (s.label_u == s.label_v) colors[s.label_u] = 3;
    return canonical_form(s.graph, colors).certificate;
}

std::vector<SPTerm> enumerate_series_parallel(int max_edges) {
    if (max_edges > 8) throw BudgetError("enumerate_series_parallel: edge cap exceeded");
    std::vector<SPTerm> terms;
    if (max_edges < 1) return terms;
    std::set<std::string> seen;
    terms.push_back({"A", atom_A()});
    seen.insert(labelled_certificate(terms[0].realization));
    std::size_t processed = 0;  // pairs with both indices below this are done
    while (processed < terms.size()) {
        std::size_t size = terms.size();
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (i < processed && j < processed) continue;
                std::vector<SPTerm> candidates;
                candidates.push_back({"(" + terms[i].expression + "*" + terms[j].expression + ")",
                                      series(terms[i].realization, terms[j].realization)});
                if (i <= j)
                    candidates.push_back(
                        {"(" + terms[i].expression + "&" + terms[j].expression + ")",
                         parallel(terms[i].realization, terms[j].realization)});
                for (SPTerm& t : candidates) {
                    if (t.realization.graph.edge_count() > max_edges) continue;
                    std::string cert = labelled_certificate(t.realization);
                    if (seen.insert(cert).second) terms.push_back(std::move(t));
                }
            }
        }
        processed = size;
    }
    std::stable_sort(terms.begin(), terms.end(), [](const SPTerm& a, const SPTerm& b) {
        int ea = a.realization.graph.edge_count(), eb = b.realization.graph.edge_count();
        if (ea != eb) return ea < eb;
        return labelled_certificate(a.realization) < labelled_certificate(b.realization);
    });
    return terms;
}

}  // namespace homind
