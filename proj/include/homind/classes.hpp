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
// Graph-class predicates and distances built on one branch-set containment
// engine: minor and topological-minor tests, planarity and its k-component
// extension, bounded degree and treewidth, the rooted-decomposition class
// behind repeated triangle 2-sums, deletion and elimination distance, and
// explicit witness constructions.

#ifndef HOMIND_CLASSES_HPP
#define HOMIND_CLASSES_HPP

#include <string>

#include "homind/family.hpp"
#include "homind/graph.hpp"

namespace homind {

// Named membership test with one optional integer parameter. Known names:
//   planar        no K_5 minor and no K_{3,3} minor
//   p_k:K         excludes every minor with exactly K components, each of
//                 them isomorphic to K_5 or K_{3,3}
//   maxdeg:D      maximum degree at most D
//   d3star        admits a tree decomposition whose root bag has a torso of
//                 maximum degree at most 3 and whose other bags have size
//                 at most 3
//   tw_le:K       treewidth at most K
//   edgeless      no edges
//   forests       no cycles
//   empty         no vertices
//   k2h_free:H    no K_4 minor and no K_{2,H} minor
struct ClassPredicate {
    std::string name;
    int param = 0;
};

ClassPredicate parse_class_predicate(const std::string& token);
std::string predicate_token(const ClassPredicate& p);

// True iff m is a minor of g: disjoint connected branch sets in g, one per
// vertex of m, linked by an edge wherever m has one.
bool has_minor(const Graph& g, const Graph& m);

// True iff g contains a subdivision of m: injective branch vertices joined by
// internally disjoint paths that avoid every branch vertex.
bool has_topological_minor(const Graph& g, const Graph& m);

bool class_member(const Graph& g, const ClassPredicate& p);

// Resolver bridge for family enumeration: predicate token -> callable.
PredicateFn class_predicate(const std::string& token);

// Least |X| with g - X a member of p.
int deletion_distance(const Graph& g, const ClassPredicate& p);

// Members score 0; a connected non-member scores 1 plus the best single
// vertex deletion; a disconnected non-member scores the worst component.
// Memoized on canonical forms.
int elimination_distance(const Graph& g, const ClassPredicate& p);

enum class WitnessKind { Genus, Hadwiger };

// Genus k: k+1 disjoint copies of K_5 and a fresh vertex adjacent to one
// vertex of each copy. Hadwiger k: 2k+1 disjoint copies of K_5 plus k+1
// universal vertices; the result is verified (k+1)-connected before return.
Graph build_witness(WitnessKind kind, int k);

}  // namespace homind

#endif  // HOMIND_CLASSES_HPP
