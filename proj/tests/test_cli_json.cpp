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

#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "homind/contractor.hpp"
#include "homind/graph.hpp"
#include "homind/graph6.hpp"
#include "homind/json_io.hpp"
#include "homind/oddo.hpp"
#include "homind/reductions.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("graphs travel as graph6") {
    Graph g = petersen_graph();
    json j = graph_to_json(g);
    CHECK(j.at("n") == 10);
    CHECK(j.at("m") == 15);
    Graph back = graph_from_json(j);
    CHECK(back.n == g.n);
    CHECK(back.adj == g.adj);

    CHECK(graph_from_json(json("Bw")).n == 3);
    CHECK_THROWS_AS(graph_from_json(json{{"order", 3}}), ParseError);
}

TEST_CASE("family specs round trip") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::PredicateFiltered;
    spec.max_n = 6;
    spec.max_m = 9;
    spec.predicate = "tw_le:2";
    FamilySpec back = family_from_json(family_to_json(spec));
    CHECK(back.kind == spec.kind);
    CHECK(back.max_n == 6);
    CHECK(back.max_m == 9);
    CHECK(back.predicate == "tw_le:2");

    FamilySpec corpus;
    corpus.kind = FamilySpec::Kind::UserCorpus;
    corpus.max_n = 5;
    corpus.corpus = {complete_graph(3), path_graph(4)};
    FamilySpec corpus_back = family_from_json(family_to_json(corpus));
    REQUIRE(corpus_back.corpus.size() == 2);
    CHECK(corpus_back.corpus[0].n == 3);
    CHECK(corpus_back.corpus[1].n == 4);
}

TEST_CASE("homomorphisms and certificates") {
    Homomorphism phi{star_graph(3), complete_graph(2), {0, 1, 1, 1}};
    Homomorphism back = hom_from_json(hom_to_json(phi));
    CHECK(back.map == phi.map);
    CHECK(back.source.adj == phi.source.adj);
    CHECK(back.target.adj == phi.target.adj);

    auto cert = verify_oddomorphism(phi);
    REQUIRE(cert.has_value());
    json cj = certificate_to_json(*cert);
    CHECK(cj.at("plain") == true);
    CHECK(cj.at("parity") == json::array({"odd", "odd", "odd", "odd"}));
    CHECK(cj.at("fibre_odd_count") == json::array({1, 3}));
    CHECK(!cj.contains("weak_vertices"));

    auto weak = verify_weak_oddomorphism({cycle_graph(4), complete_graph(2), {0, 1, 0, 1}});
    REQUIRE(weak.has_value());
    REQUIRE(weak->weak_vertices.has_value());
    REQUIRE(weak->weak_edges.has_value());
    json wj = certificate_to_json(*weak);
    CHECK(wj.at("plain") == false);
    CHECK(int(wj.at("weak_vertices").size()) == __builtin_popcountll(*weak->weak_vertices));
    CHECK(wj.at("weak_edges").size() == weak->weak_edges->size());
    for (const auto& e : wj.at("weak_edges")) CHECK(e.size() == 2);
}

TEST_CASE("separator instances serialize their parity system") {
    Graph f(5);
    f.add_edge(3, 4);
    Graph g(3);
    g.add_edge(1, 2);
    auto cert = verify_oddomorphism({f, g, {0, 0, 0, 1, 2}});
    REQUIRE(cert.has_value());
    SeparatorReduction red = separator_reduce(*cert, 0b00001);
    json j = separator_instance_to_json(red.instance);
    CHECK(j.at("separator") == json::array({0}));
    CHECK(j.at("parity_cols") == 3);
    CHECK(j.at("parity_rows") == json::array({4}));
    CHECK(j.at("chosen") == json::array({2}));
    CHECK(j.at("groups") == json::array({json::array({0})}));
    CHECK(j.at("certificate").at("plain") == true);
}

TEST_CASE("contractor combinations keep exact rationals") {
    ContractorCombination alpha = solve_contractor(complete_graph(2), complete_graph(2), 2);
    json j = combination_to_json(alpha);
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("expr") == "(A*A)");
    CHECK(j[0].at("num") == "1");
    CHECK(j[0].at("den") == "1");
}

TEST_CASE("reports carry the schema version and replay inputs") {
    ExperimentReport report;
    report.command = "suite run";
    report.parameters = {{"id", "codec-counting"}};
    report.payload = {{"ok", true}};
    report.bounds = {{"max_n", 5}};
    json j = report_to_json(report);
    CHECK(j.at("schema_version") == kReportSchemaVersion);
    CHECK(j.at("schema_version") == "1");
    CHECK(j.at("command") == "suite run");
    CHECK(j.at("seed") == kDefaultSeed);
    CHECK(j.at("seed") == 1729);
    CHECK(j.at("wall_time_seconds").is_number());
    CHECK(j.at("parameters").at("id") == "codec-counting");
    CHECK(j.at("payload").at("ok") == true);
    CHECK(j.at("bounds").at("max_n") == 5);
    CHECK(j.at("pass") == true);
}

}  // TEST_SUITE

}  // namespace
