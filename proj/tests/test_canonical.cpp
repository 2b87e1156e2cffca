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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

#include "homind/canonical.hpp"
#include "homind/family.hpp"
#include "homind/graph.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

// Reference isomorphism test by enumerating all vertex bijections.
bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

TEST_SUITE("canonical") {

TEST_CASE("relabelling never changes the certificate") {
    std::mt19937_64 rng(kDefaultSeed);
    for (const Graph& g : enumerate_graphs(6)) {
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = apply_permutation(g, perm);
        CHECK(canonical_form(g).certificate == canonical_form(h).certificate);
    }
}

TEST_CASE("the canonical order is a permutation that realizes the certificate") {
    Graph g = petersen_graph();
    CanonicalForm form = canonical_form(g);
    std::vector<int> seen(g.n, 0);
    for (int v : form.order) {
        REQUIRE(v >= 0);
        REQUIRE(v < g.n);
        ++seen[v];
    }
    for (int c : seen) CHECK(c == 1);
}

TEST_CASE("isomorphism agrees with the brute-force oracle on all small pairs") {
    std::vector<Graph> all = enumerate_graphs(4);
    for (const Graph& g : all)
        for (const Graph& h : all) CHECK(are_isomorphic(g, h) == brute_isomorphic(g, h));
}

TEST_CASE("distinct graphs with equal degree sequences are told apart") {
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    Graph hexagon = cycle_graph(6);
    CHECK(!are_isomorphic(two_triangles, hexagon));
    CHECK(are_isomorphic(cycle_graph(6), apply_permutation(cycle_graph(6), {3, 0, 5, 1, 4, 2})));
    CHECK(!are_isomorphic(path_graph(4), star_graph(3)));
    CHECK(!are_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
}

TEST_CASE("colours refine the certificate") {
    Graph p3 = path_graph(3);
    std::vector<int> ends_marked{1, 0, 1};
    std::vector<int> centre_marked{0, 1, 0};
    CHECK(canonical_form(p3, ends_marked).certificate !=
          canonical_form(p3, centre_marked).certificate);
    // Swapping the two ends is an automorphism, so their markings agree.
    CHECK(canonical_form(p3, {1, 0, 0}).certificate == canonical_form(p3, {0, 0, 1}).certificate);
}

TEST_CASE("the order cap guards oversized inputs") {
    CHECK_THROWS_AS(canonical_form(path_graph(25)), BudgetError);
    std::vector<int> rev(25);
    for (int i = 0; i < 25; ++i) rev[i] = 24 - i;
    CHECK(canonical_form(path_graph(25), {}, 30).certificate ==
          canonical_form(apply_permutation(path_graph(25), rev), {}, 30).certificate);
}

}  // TEST_SUITE

}  // namespace
