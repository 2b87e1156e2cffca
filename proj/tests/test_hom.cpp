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

#include <optional>
#include <vector>

#include "doctest.h"

#include "homind/canonical.hpp"
#include "homind/family.hpp"
#include "homind/graph.hpp"
#include "homind/hom.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

// Reference count over the full map odometer, no pruning.
long long odometer_homs(const Graph& f, const Graph& g) {
    if (f.n == 0) return 1;
    if (g.n == 0) return 0;
    std::vector<int> map(f.n, 0);
    long long total = 0;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : f.edges())
            if (!g.has_edge(map[u], map[v])) {
                ok = false;
                break;
            }
        total += ok;
        int i = f.n - 1;
        while (i >= 0 && map[i] == g.n - 1) map[i--] = 0;
        if (i < 0) return total;
        ++map[i];
    }
}

TEST_SUITE("hom") {

TEST_CASE("pinned counts") {
    CHECK(count_homs(complete_graph(2), complete_graph(3)) == 6);
    CHECK(count_homs(cycle_graph(4), complete_graph(3)) == 18);
    CHECK(count_homs(cycle_graph(3), disjoint_union(cycle_graph(3), cycle_graph(3))) == 12);
    CHECK(count_homs(cycle_graph(3), cycle_graph(6)) == 0);
    CHECK(count_homs(cycle_graph(6), complete_graph(3)) == 66);
    CHECK(count_homs(Graph(0), complete_graph(3)) == 1);
    CHECK(count_homs(complete_graph(3), Graph(0)) == 0);
    CHECK(count_homs(Graph(3), complete_graph(2)) == 8);
}

TEST_CASE("dispatcher agrees with the odometer oracle on all small pairs") {
    std::vector<Graph> all = enumerate_graphs(4);
    for (const Graph& f : all)
        for (const Graph& g : all) {
            long long want = odometer_homs(f, g);
            CHECK(count_homs(f, g) == u128(want));
            CHECK(count_homs_big(f, g) == BigInt(want));
        }
}

TEST_CASE("the pinned engines agree with each other off the dispatcher") {
    std::vector<Graph> all = enumerate_graphs(4);
    for (const Graph& f : all)
        for (const Graph& g : all)
            CHECK(count_homs_backtracking(f, g) == count_homs_decomposition(f, g));
    CHECK(count_homs_backtracking(cycle_graph(5), petersen_graph()) ==
          count_homs_decomposition(cycle_graph(5), petersen_graph()));
}

TEST_CASE("counting is multiplicative over source components") {
    Graph f1 = cycle_graph(3);
    Graph f2 = path_graph(3);
    Graph g = complete_graph(4);
    CHECK(count_homs(disjoint_union(f1, f2), g) == count_homs(f1, g) * count_homs(f2, g));
}

TEST_CASE("enumeration is lexicographic, complete, and stoppable") {
    Graph f = path_graph(3);
    Graph g = complete_graph(3);
    std::vector<std::vector<int>> seen;
    for_each_hom(f, g, [&](const std::vector<int>& map) {
        seen.push_back(map);
        return true;
    });
    CHECK(u128(seen.size()) == count_homs(f, g));
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
    for (const auto& map : seen) CHECK(is_homomorphism(f, g, map));
    int visits = 0;
    for_each_hom(f, g, [&](const std::vector<int>&) { return ++visits < 3; });
    CHECK(visits == 3);
    int empties = 0;
    for_each_hom(Graph(0), g, [&](const std::vector<int>& map) {
        CHECK(map.empty());
        ++empties;
        return true;
    });
    CHECK(empties == 1);
    std::vector<Homomorphism> homs = enumerate_homs(f, g);
    CHECK(homs.size() == seen.size());
    CHECK_THROWS_AS(enumerate_homs(path_graph(10), complete_graph(10), 100.0), BudgetError);
}

TEST_CASE("find_distinguisher separates the known pair and respects agreement") {
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    Graph hexagon = cycle_graph(6);
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::AllGraphs;
    spec.max_n = 3;
    std::optional<Graph> f = find_distinguisher(two_triangles, hexagon, spec);
    REQUIRE(f.has_value());
    CHECK(count_homs_big(*f, two_triangles) != count_homs_big(*f, hexagon));
    CHECK(are_isomorphic(*f, cycle_graph(3)));
    CHECK(!find_distinguisher(hexagon, hexagon, spec).has_value());
}

}  // TEST_SUITE

}  // namespace
