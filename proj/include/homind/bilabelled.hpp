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
//
// Bilabelled graphs (F, u, v) and their composition algebra: parallel glues
// both label pairs and multiplies homomorphism matrices entrywise, series
// glues v1 to u2 and multiplies them as matrices. Series-parallel terms are
// the closure of the single-edge atom A under both operations.

#ifndef HOMIND_BILABELLED_HPP
#define HOMIND_BILABELLED_HPP

#include <string>
#include <vector>

#include "homind/hom.hpp"

namespace homind {

struct BilabelledGraph {
    Graph graph;
    int label_u = 0;
    int label_v = 0;

    BilabelledGraph() : graph(1) {}
    BilabelledGraph(Graph g, int u, int v);
};

// Single vertex carrying both labels; its hom matrix is the identity.
BilabelledGraph atom_I();
// An edge labelled at its endpoints; its hom matrix is the adjacency matrix.
BilabelledGraph atom_A();
// Two isolated labelled vertices; its hom matrix is all-ones.
BilabelledGraph atom_J();

// Disjoint union with u1=u2 and v1=v2 identified (duplicate label edges
// merge). Rejected when one side's labels coincide while the other side
// joins its labels by an edge, which would create a loop.
BilabelledGraph parallel(const BilabelledGraph& s1, const BilabelledGraph& s2);

// Identifies v1 with u2; the result is labelled (u1, v2). Never creates
// loops or multi-edges.
BilabelledGraph series(const BilabelledGraph& s1, const BilabelledGraph& s2);

// Forgets the labels.
Graph soe_graph(const BilabelledGraph& s);

struct HomMatrix {
    Graph target;
    // entries[x][y] = number of homomorphisms h with h(u)=x, h(v)=y.
    std::vector<std::vector<BigInt>> entries;
};

HomMatrix hom_matrix(const BilabelledGraph& s, const Graph& g, double budget = 1e8);

struct SPTerm {
    // Infix expression over atom "A": "*" for series, "&" for parallel.
    std::string expression;
    BilabelledGraph realization;
};

// All series-parallel terms whose realization has at most max_edges edges,
// one representative per labelled isomorphism class, ordered by edge count
// then labelled certificate.
std::vector<SPTerm> enumerate_series_parallel(int max_edges);

// Certificate of the realization with the two labels as colours; the dedupe
// key for terms.
std::string labelled_certificate(const BilabelledGraph& s);

}  // namespace homind

#endif  // HOMIND_BILABELLED_HPP
