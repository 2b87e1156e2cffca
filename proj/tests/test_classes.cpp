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

#include "doctest.h"

#include "homind/classes.hpp"
#include "homind/graph.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

TEST_SUITE("classes") {

TEST_CASE("minor containment on the classic examples") {
    Graph petersen = petersen_graph();
    Graph v8 = wagner_v8();
    Graph k5 = complete_graph(5);
    Graph k33 = complete_bipartite(3, 3);

    CHECK(has_minor(petersen, k5));
    CHECK(has_minor(petersen, k33));
    CHECK(!has_minor(complete_graph(4), k5));
    CHECK(has_minor(k5, complete_graph(4)));

    // The Wagner graph is K5-minor-free yet not planar.
    CHECK(!has_minor(v8, k5));
    CHECK(has_minor(v8, k33));

    // Every graph contains itself and the single vertex.
    CHECK(has_minor(v8, v8));
    CHECK(has_minor(v8, complete_graph(1)));
    CHECK(!has_minor(complete_graph(1), complete_graph(2)));
}

TEST_CASE("topological minors respect degrees") {
    // K5 needs degree-4 branch vertices; the Petersen graph is cubic, yet it
    // still holds a K5 minor.
    CHECK(!has_topological_minor(petersen_graph(), complete_graph(5)));
    CHECK(has_topological_minor(petersen_graph(), complete_bipartite(3, 3)));
    CHECK(has_topological_minor(complete_bipartite(3, 3), complete_graph(4)));
    CHECK(has_topological_minor(cycle_graph(6), cycle_graph(3)));
    CHECK(!has_topological_minor(path_graph(5), cycle_graph(3)));
}

TEST_CASE("planarity and its k-component extension") {
    CHECK(class_member(complete_graph(4), {"planar", 0}));
    CHECK(!class_member(complete_graph(5), {"planar", 0}));
    CHECK(!class_member(complete_bipartite(3, 3), {"planar", 0}));
    CHECK(!class_member(petersen_graph(), {"planar", 0}));
    CHECK(!class_member(wagner_v8(), {"planar", 0}));

    // One Kuratowski component is allowed at level two, two are not.
    Graph two_k5 = disjoint_union(complete_graph(5), complete_graph(5));
    CHECK(class_member(complete_graph(5), {"p_k", 2}));
    CHECK(!class_member(two_k5, {"p_k", 2}));
    CHECK(class_member(two_k5, {"p_k", 3}));
    Graph mixed = disjoint_union(complete_graph(5), complete_bipartite(3, 3));
    CHECK(!class_member(mixed, {"p_k", 2}));
}

TEST_CASE("degree, treewidth and base predicates") {
    CHECK(class_member(star_graph(4), {"maxdeg", 4}));
    CHECK(!class_member(star_graph(4), {"maxdeg", 3}));
    CHECK(class_member(cycle_graph(5), {"tw_le", 2}));
    CHECK(!class_member(cycle_graph(5), {"tw_le", 1}));
    CHECK(class_member(path_graph(6), {"tw_le", 1}));
    CHECK(class_member(Graph(3), {"edgeless", 0}));
    CHECK(!class_member(complete_graph(2), {"edgeless", 0}));
    CHECK(class_member(path_graph(4), {"forests", 0}));
    CHECK(!class_member(cycle_graph(3), {"forests", 0}));
    CHECK(class_member(Graph(0), {"empty", 0}));
    CHECK(!class_member(complete_graph(1), {"empty", 0}));
}

TEST_CASE("rooted decompositions with a low-degree torso") {
    CHECK(class_member(complete_graph(4), {"d3star", 0}));
    CHECK(class_member(petersen_graph(), {"d3star", 0}));
    // A high-degree centre is fine: the root torso contracts the leaves away.
    CHECK(class_member(star_graph(4), {"d3star", 0}));
    CHECK(!class_member(complete_graph(5), {"d3star", 0}));
}

TEST_CASE("series-parallel style exclusions") {
    CHECK(class_member(cycle_graph(4), {"k2h_free", 3}));
    CHECK(!class_member(complete_graph(4), {"k2h_free", 3}));
    CHECK(!class_member(complete_bipartite(2, 3), {"k2h_free", 3}));
    CHECK(class_member(complete_bipartite(2, 3), {"k2h_free", 4}));
}

TEST_CASE("deletion distance") {
    CHECK(deletion_distance(complete_graph(5), {"planar", 0}) == 1);
    CHECK(deletion_distance(complete_graph(4), {"planar", 0}) == 0);
    CHECK(deletion_distance(disjoint_union(complete_graph(5), complete_graph(5)),
                            {"planar", 0}) == 2);
    CHECK(deletion_distance(petersen_graph(), {"planar", 0}) == 2);
    CHECK(deletion_distance(cycle_graph(3), {"edgeless", 0}) == 2);
    CHECK(deletion_distance(star_graph(5), {"edgeless", 0}) == 1);
}

TEST_CASE("elimination distance") {
    CHECK(elimination_distance(Graph(0), {"empty", 0}) == 0);
    CHECK(elimination_distance(complete_graph(1), {"empty", 0}) == 1);
    CHECK(elimination_distance(complete_graph(2), {"empty", 0}) == 2);
    CHECK(elimination_distance(complete_graph(3), {"empty", 0}) == 3);
    CHECK(elimination_distance(path_graph(4), {"empty", 0}) == 3);
    // Disconnected graphs score their worst component.
    CHECK(elimination_distance(Graph(2), {"empty", 0}) == 1);
    CHECK(elimination_distance(cycle_graph(4), {"forests", 0}) == 1);
    CHECK(elimination_distance(cycle_graph(4), {"edgeless", 0}) == 2);
}

TEST_CASE("witness constructions") {
    Graph genus = build_witness(WitnessKind::Genus, 1);
    CHECK(genus.n == 11);
    CHECK(genus.degree(10) == 2);
    CHECK(genus.max_degree() == 5);
    CHECK(has_minor(genus, complete_graph(5)));
    CHECK(deletion_distance(genus, {"planar", 0}) == 2);

    Graph hadwiger = build_witness(WitnessKind::Hadwiger, 1);
    CHECK(hadwiger.n == 17);
    CHECK(hadwiger.degree(15) == 16);
    CHECK(hadwiger.degree(16) == 16);
    CHECK(is_k_connected(hadwiger, 2));

    CHECK_THROWS_AS(build_witness(WitnessKind::Genus, -1), PreconditionError);
    CHECK_THROWS_AS(build_witness(WitnessKind::Genus, 40), BudgetError);
}

TEST_CASE("predicate tokens parse and print") {
    ClassPredicate p = parse_class_predicate("tw_le:3");
    CHECK(p.name == "tw_le");
    CHECK(p.param == 3);
    CHECK(predicate_token(p) == "tw_le:3");
    CHECK(predicate_token(parse_class_predicate("planar")) == "planar");
    CHECK(parse_class_predicate("k2h_free:4").param == 4);

    CHECK_THROWS_AS(parse_class_predicate("frobnicate"), ParseError);
    CHECK_THROWS_AS(parse_class_predicate("maxdeg"), ParseError);
    CHECK_THROWS_AS(parse_class_predicate("planar:2"), ParseError);
    CHECK_THROWS_AS(parse_class_predicate("maxdeg:x"), ParseError);
    CHECK_THROWS_AS(parse_class_predicate("p_k:0"), ParseError);

    PredicateFn fn = class_predicate("forests");
    CHECK(fn(path_graph(4)));
    CHECK(!fn(cycle_graph(4)));
}

}  // TEST_SUITE

}  // namespace
