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
// Exact homomorphism counting and enumeration. Small instances run a pruned
// backtracking search; larger patterns run a dynamic program over a nice tree
// decomposition. Counts use checked 128-bit arithmetic by default, with a
// big-integer variant for counts that overflow it.

#ifndef HOMIND_HOM_HPP
#define HOMIND_HOM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "homind/family.hpp"
#include "homind/graph.hpp"

namespace homind {

using BigInt = boost::multiprecision::cpp_int;

struct Homomorphism {
    Graph source;
    Graph target;
    std::vector<int> map;  // map[a] is the image of source vertex a
};

bool is_homomorphism(const Graph& f, const Graph& g, const std::vector<int>& map);

// Exact count of homomorphisms f -> g. Throws OverflowError when the count
// exceeds 128 bits; count_homs_big never overflows.
u128 count_homs(const Graph& f, const Graph& g);
BigInt count_homs_big(const Graph& f, const Graph& g);

// Engine-pinned counts for cross-checking the dispatcher: a pruned
// backtracking count and a dynamic program over a tree decomposition of f.
u128 count_homs_backtracking(const Graph& f, const Graph& g);
u128 count_homs_decomposition(const Graph& f, const Graph& g);

// Calls visit for every homomorphism in lexicographic order of the map;
// visiting stops early when visit returns false.
void for_each_hom(const Graph& f, const Graph& g,
                  const std::function<bool(const std::vector<int>&)>& visit);

// Materialized maps, guarded by |V(g)|^|V(f)| <= budget.
std::vector<Homomorphism> enumerate_homs(const Graph& f, const Graph& g, double budget = 1e8);

// First family member (in enumeration order) whose hom counts into g and h
// differ, or nothing when every member agrees.
std::optional<Graph> find_distinguisher(const Graph& g, const Graph& h, const FamilySpec& family,
                                        const PredicateResolver& resolver = nullptr);

}  // namespace homind

#endif  // HOMIND_HOM_HPP
