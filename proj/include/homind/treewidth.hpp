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
// Exact treewidth by dynamic programming over elimination orderings, plus the
// tree-decomposition bookkeeping the reduction lemmas rely on.

#ifndef HOMIND_TREEWIDTH_HPP
#define HOMIND_TREEWIDTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

struct TreeDecomposition {
    Graph tree;                        // a tree on bag indices
    std::vector<std::uint64_t> bags;   // bag masks over subject vertices
    Graph subject;

    TreeDecomposition() : tree(0), subject(0) {}

    // max |bag| - 1, or -1 when every bag is empty.
    int width() const;
    // Checks: tree shape, vertex and edge coverage, connected occurrence
    // subtrees.
    bool valid() const;
};

// Sum of squared bag sizes.
int decomposition_weight(const TreeDecomposition& d);

// Returns tw(g) and a witness decomposition of that width.
std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, int max_order = 15);

// Smallest-index vertex v with deg(v) <= k whose removal keeps g connected.
// Such a vertex exists in every connected graph of treewidth <= k; failure
// signals a violated precondition.
int find_noncut_low_degree_vertex(const Graph& g, int k);

}  // namespace homind

#endif  // HOMIND_TREEWIDTH_HPP
