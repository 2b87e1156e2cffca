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
// The subset-parity gadget construction over a connected base graph. Each
// base vertex v becomes the gadget {(v,S) : S an even subset of the edges at
// v}; the twisted sibling flips the parity requirement at one vertex. Gadget
// vertices (u,S) and (w,T) are adjacent iff uw is a base edge on which S and
// T agree.

#ifndef HOMIND_CFI_HPP
#define HOMIND_CFI_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

struct CFIPair {
    Graph base;
    int twist = 0;  // base vertex with odd parity in the twisted graph
    Graph even;     // G0
    Graph odd;      // G1
    // For each gadget vertex: its base vertex and its subset as a mask over
    // base edge indices (order of Graph::edges on the base).
    std::vector<std::pair<int, std::uint64_t>> even_index;
    std::vector<std::pair<int, std::uint64_t>> odd_index;
};

// Both gadget graphs have Σ_v 2^(deg v - 1) vertices and are never
// isomorphic to each other.
CFIPair build_cfi_pair(const Graph& base, int twist = 0);

// True iff hom counts from f into the two sides differ.
bool cfi_distinguishes(const Graph& f, const CFIPair& pair);

}  // namespace homind

#endif  // HOMIND_CFI_HPP
