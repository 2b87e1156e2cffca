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
// Deterministic enumeration of graph families up to isomorphism. Levels are
// built by extending the previous level's representatives with every possible
// neighbourhood of a new vertex and deduplicating by canonical form; the
// output order is (order, edge count, certificate).

#ifndef HOMIND_FAMILY_HPP
#define HOMIND_FAMILY_HPP

#include <functional>
#include <string>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

using PredicateFn = std::function<bool(const Graph&)>;
// Maps a predicate name to a callable; supplied by the classes module so the
// enumeration layer stays below it.
using PredicateResolver = std::function<PredicateFn(const std::string&)>;

struct FamilySpec {
    enum class Kind { AllGraphs, AllConnected, Trees, Planar, UserCorpus, PredicateFiltered };

    Kind kind = Kind::AllGraphs;
    int max_n = 0;
    int max_m = -1;  // -1 means unbounded
    std::string predicate;       // PredicateFiltered only
    std::vector<Graph> corpus;   // UserCorpus only
};

const char* family_kind_name(FamilySpec::Kind kind);
FamilySpec::Kind parse_family_kind(const std::string& name);

// All graphs with 1..max_n vertices up to isomorphism, optionally capped by
// edge count or restricted to connected graphs.
std::vector<Graph> enumerate_graphs(int max_n, int max_m = -1, bool connected_only = false);

// Enumerates the family a spec describes. Kinds that reference a class
// predicate (Planar, PredicateFiltered) need a resolver.
std::vector<Graph> enumerate_family(const FamilySpec& spec,
                                    const PredicateResolver& resolver = nullptr);

}  // namespace homind

#endif  // HOMIND_FAMILY_HPP
