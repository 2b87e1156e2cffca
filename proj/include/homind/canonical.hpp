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
// Exact canonical forms by individualization and refinement. Two graphs are
// isomorphic iff their certificates are equal; vertex colours, when given,
// must be preserved by the implied isomorphism.

#ifndef HOMIND_CANONICAL_HPP
#define HOMIND_CANONICAL_HPP

#include <string>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

struct CanonicalForm {
    // Byte string: order, colour sequence in canonical order, packed upper
    // triangle of the reordered adjacency matrix.
    std::string certificate;
    // order[i] is the original vertex placed at canonical position i.
    std::vector<int> order;
};

// Exact at any order it accepts; the cap guards against branching blowups on
// graphs larger than this project ever canonicalizes.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {},
                             int max_order = 20);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace homind

#endif  // HOMIND_CANONICAL_HPP
