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
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"

#include "homind/canonical.hpp"
#include "homind/graph.hpp"
#include "homind/oddo.hpp"
#include "homind/reductions.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

OddoCertificate make_cert(const Graph& f, const Graph& g, std::vector<int> map) {
    auto cert = verify_oddomorphism({f, g, std::move(map)});
    REQUIRE(cert.has_value());
    REQUIRE(cert->plain);
    return *cert;
}

std::uint64_t apply_f2(const F2Matrix& m, std::uint64_t x) {
    std::uint64_t out = 0;
    for (int r = 0; r < m.rows; ++r)
        out |= std::uint64_t(std::popcount(m.bits[r] & x) & 1) << r;
    return out;
}

TEST_SUITE("reductions") {

TEST_CASE("f2 matrices agree with exhaustive search") {
    std::mt19937_64 rng(1729);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = int(rng() % 7);
        int cols = 1 + int(rng() % 8);
        F2Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.set(r, c, int(rng() & 1));

        std::uint64_t rhs = rng() & ((std::uint64_t(1) << rows) - 1);
        std::optional<std::uint64_t> brute;
        std::uint64_t kernel = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t(1) << cols); ++x) {
            if (apply_f2(m, x) == 0) ++kernel;
            if (!brute && apply_f2(m, x) == rhs) brute = x;
        }
        CHECK(m.least_solution(rhs) == brute);
        CHECK(kernel == std::uint64_t(1) << (cols - m.rank()));

        std::vector<std::uint64_t> basis = m.nullspace();
        CHECK(int(basis.size()) == cols - m.rank());
        for (std::uint64_t v : basis) CHECK(apply_f2(m, v) == 0);
        std::vector<std::uint64_t> span;
        for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << basis.size()); ++pick) {
            std::uint64_t v = 0;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (pick >> i & 1) v ^= basis[i];
            span.push_back(v);
        }
        std::sort(span.begin(), span.end());
        CHECK(std::adjacent_find(span.begin(), span.end()) == span.end());
    }

    F2Matrix fixed(2, 3);
    fixed.set(0, 0, 1);
    fixed.set(0, 1, 1);
    fixed.set(1, 1, 1);
    fixed.set(1, 2, 1);
    CHECK(fixed.rank() == 2);
    CHECK(fixed.least_solution(0b11) == std::uint64_t(0b010));
    CHECK(fixed.nullspace() == std::vector<std::uint64_t>{0b111});

    F2Matrix bad(2, 2);
    bad.set(0, 0, 1);
    bad.set(0, 1, 1);
    bad.set(1, 0, 1);
    bad.set(1, 1, 1);
    CHECK(!bad.least_solution(0b01).has_value());
}

TEST_CASE("isolated vertices drop from fibres over non-isolated targets") {
    Graph f = disjoint_union(cycle_graph(3), complete_graph(1));
    OddoCertificate cert = make_cert(f, cycle_graph(3), {0, 1, 2, 0});
    OddoCertificate out = remove_isolated(cert, 3);
    CHECK(out.plain);
    CHECK(out.phi.source.n == 3);
    CHECK(out.phi.map == std::vector<int>{0, 1, 2});

    OddoCertificate lone = make_cert(Graph(3), complete_graph(1), {0, 0, 0});
    CHECK_THROWS_AS(remove_isolated(lone, 2), PreconditionError);
    OddoCertificate tri = make_cert(cycle_graph(3), cycle_graph(3), {0, 1, 2});
    CHECK_THROWS_AS(remove_isolated(tri, 0), PreconditionError);
}

TEST_CASE("twin leaves drop in pairs") {
    OddoCertificate star = make_cert(star_graph(3), complete_graph(2), {0, 1, 1, 1});
    OddoCertificate out = remove_twins(star, 1, 2);
    CHECK(out.plain);
    CHECK(out.phi.source.n == 2);
    CHECK(out.phi.source.has_edge(0, 1));
    CHECK(out.phi.map == std::vector<int>{0, 1});
    CHECK_THROWS_AS(remove_twins(star, 0, 1), PreconditionError);
}

TEST_CASE("cut vertex reduction keeps an eligible component") {
    // Star onto an edge: the centre keeps its parity, no partner fires.
    OddoCertificate star = make_cert(star_graph(3), complete_graph(2), {0, 1, 1, 1});
    CutVertexReduction r = cut_vertex_reduce(star, 0);
    CHECK(r.component_index == 0);
    CHECK(r.component_mask == std::uint64_t(0b0010));
    CHECK(r.origin == std::vector<int>{0, 1});
    CHECK(r.cert.plain);
    CHECK(r.cert.phi.source.n == 2);
    CHECK(!r.odd_partner.has_value());

    // The cut vertex flips from even to odd inside the piece; the partner is
    // the odd vertex left behind in its fibre.
    Graph f(4);
    f.add_edge(0, 1);
    f.add_edge(1, 2);
    f.add_edge(0, 3);
    OddoCertificate flip = make_cert(f, complete_graph(2), {1, 0, 1, 0});
    CHECK(flip.report.vertex_parity[1] == Parity::Even);
    CutVertexReduction q = cut_vertex_reduce(flip, 1);
    CHECK(q.component_index == 1);
    CHECK(q.component_mask == std::uint64_t(0b0100));
    CHECK(q.origin == std::vector<int>{1, 2});
    CHECK(q.cert.plain);
    CHECK(q.cert.phi.map == std::vector<int>{0, 1});
    REQUIRE(q.odd_partner.has_value());
    CHECK(*q.odd_partner == 3);

    // Removing the cut vertex's image must keep the target connected.
    OddoCertificate path = make_cert(path_graph(3), path_graph(3), {0, 1, 2});
    CHECK_THROWS_AS(cut_vertex_reduce(path, 1), PreconditionError);
}

TEST_CASE("separator reduction on a hand-checked instance") {
    Graph f(5);
    f.add_edge(3, 4);
    Graph g(3);
    g.add_edge(1, 2);
    OddoCertificate cert = make_cert(f, g, {0, 0, 0, 1, 2});

    SeparatorReduction red = separator_reduce(cert, 0b00001);
    const SeparatorInstance& in = red.instance;
    CHECK(in.separator == std::vector<int>{0});
    CHECK(in.components ==
          std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
    CHECK(in.target_components == std::vector<std::vector<int>>{{1, 2}});
    CHECK(in.parity.rows == 1);
    CHECK(in.parity.cols == 3);
    CHECK(in.parity.get(0, 0) == 0);
    CHECK(in.parity.get(0, 1) == 0);
    CHECK(in.parity.get(0, 2) == 1);
    CHECK(in.chosen == std::vector<int>{2});
    CHECK(in.groups == std::vector<std::vector<int>>{{0}});
    CHECK(chosen_vertices(in) == std::vector<int>{3, 4});

    CHECK(red.reduced.phi.source.n == 3);
    CHECK(red.reduced.phi.source.edge_count() == 1);
    CHECK(red.reduced.phi.source.has_edge(0, 1));
    CHECK(red.reduced.phi.map == std::vector<int>{1, 2, 0});
    auto again = verify_oddomorphism(red.reduced.phi);
    REQUIRE(again.has_value());
    CHECK(again->plain);
}

TEST_CASE("group edges account for discarded components") {
    // Counting only F-edges between the separator slices would leave the
    // two contracted vertices disconnected here and break plainness: the
    // sole edge of F runs through a discarded component.
    Graph f(4);
    f.add_edge(0, 3);
    Graph g(3);
    g.add_edge(0, 2);
    OddoCertificate cert = make_cert(f, g, {0, 0, 1, 2});

    SeparatorReduction red = separator_reduce(cert, 0b1010);
    const SeparatorInstance& in = red.instance;
    CHECK(in.separator == std::vector<int>{1, 3});
    CHECK(in.components == std::vector<std::vector<int>>{{0}, {2}});
    CHECK(in.target_components == std::vector<std::vector<int>>{{1}});
    CHECK(in.parity.rows == 1);
    CHECK(in.parity.cols == 2);
    CHECK(in.parity.get(0, 0) == 0);
    CHECK(in.parity.get(0, 1) == 1);
    CHECK(in.chosen == std::vector<int>{1});
    CHECK(in.groups == std::vector<std::vector<int>>{{1}, {3}});
    CHECK(chosen_vertices(in) == std::vector<int>{2});

    CHECK(red.reduced.phi.source.n == 3);
    CHECK(red.reduced.phi.source.edge_count() == 1);
    CHECK(red.reduced.phi.source.has_edge(1, 2));
    CHECK(red.reduced.phi.map == std::vector<int>{1, 0, 2});
    auto again = verify_oddomorphism(red.reduced.phi);
    REQUIRE(again.has_value());
    CHECK(again->plain);
}

TEST_CASE("the empty separator handles surplus components") {
    OddoCertificate lone = make_cert(Graph(3), complete_graph(1), {0, 0, 0});
    SeparatorReduction red = separator_reduce(lone, 0);
    CHECK(red.instance.separator.empty());
    CHECK(red.instance.groups.empty());
    CHECK(red.instance.chosen == std::vector<int>{0});
    CHECK(red.reduced.phi.source.n == 1);
    CHECK(red.reduced.phi.map == std::vector<int>{0});

    // The same certificate with the separator covering the target is refused.
    CHECK_THROWS_AS(separator_reduce(lone, 0b001), PreconditionError);
    // Not enough source components.
    OddoCertificate tri = make_cert(cycle_graph(3), cycle_graph(3), {0, 1, 2});
    CHECK_THROWS_AS(separator_reduce(tri, 0b001), PreconditionError);
}

TEST_CASE("clique sum reduction peels a planted one-sum") {
    // Two four-cycles glued at a vertex, folded onto one of them.
    Graph f(7);
    f.add_edge(0, 1);
    f.add_edge(1, 2);
    f.add_edge(2, 3);
    f.add_edge(3, 0);
    f.add_edge(0, 4);
    f.add_edge(4, 5);
    f.add_edge(5, 6);
    f.add_edge(6, 0);
    Graph c4 = cycle_graph(4);
    OddoCertificate cert = make_cert(f, c4, {0, 1, 2, 3, 1, 0, 1});

    FamilySpec family;
    family.kind = FamilySpec::Kind::AllGraphs;
    family.max_n = 4;
    OddoCertificate out = reduce_clique_sum(cert, family, 1);
    CHECK(out.plain);
    CHECK(out.phi.source.n == 4);
    CHECK(are_isomorphic(out.phi.source, c4));

    // Already separator-free: nothing changes.
    OddoCertificate k4 = make_cert(complete_graph(4), complete_graph(4), {0, 1, 2, 3});
    OddoCertificate same = reduce_clique_sum(k4, family, 2);
    CHECK(same.phi.source.n == 4);
    CHECK(same.phi.map == k4.phi.map);

    // Separator-free survivor outside the family.
    OddoCertificate k5 = make_cert(complete_graph(5), complete_graph(5), {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(reduce_clique_sum(k5, family, 2), PreconditionError);

    // The target must be (s+1)-connected.
    OddoCertificate edge = make_cert(complete_graph(2), complete_graph(2), {0, 1});
    CHECK_THROWS_AS(reduce_clique_sum(edge, family, 1), PreconditionError);
}

TEST_CASE("tree models anchor at odd vertices") {
    OddoCertificate p5 = make_cert(path_graph(5), path_graph(5), {0, 1, 2, 3, 4});
    TopologicalModel model = tree_topological_model(p5);
    CHECK(verify_topological_model(model, &p5));
    CHECK(model.rho == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(model.paths.size() == 4);

    OddoCertificate star = make_cert(star_graph(3), complete_graph(2), {0, 1, 1, 1});
    TopologicalModel sm = tree_topological_model(star);
    CHECK(verify_topological_model(sm, &star));
    CHECK(sm.rho[0] == 0);
    CHECK(star.phi.map[sm.rho[1]] == 1);

    // The cut vertex is even, so the anchor must sit on the odd partner.
    Graph f(4);
    f.add_edge(0, 1);
    f.add_edge(1, 2);
    f.add_edge(0, 3);
    OddoCertificate flip = make_cert(f, complete_graph(2), {1, 0, 1, 0});
    TopologicalModel fm = tree_topological_model(flip);
    CHECK(verify_topological_model(fm, &flip));
    CHECK(fm.rho == std::vector<int>{3, 2});

    OddoCertificate square = make_cert(cycle_graph(4), cycle_graph(4), {0, 1, 2, 3});
    CHECK_THROWS_AS(tree_topological_model(square), PreconditionError);
}

TEST_CASE("model verification rejects broken witnesses") {
    TopologicalModel model;
    model.host = cycle_graph(4);
    model.pattern = path_graph(3);
    model.rho = {0, 1, 2};
    model.pattern_edges = {{0, 1}, {1, 2}};
    model.paths = {{0, 1}, {1, 2}};
    CHECK(verify_topological_model(model));

    TopologicalModel shared = model;
    shared.paths = {{0, 1}, {1, 0, 3, 2}};
    CHECK(!verify_topological_model(shared));

    TopologicalModel skip = model;
    skip.paths = {{0, 1}, {1, 3, 2}};
    CHECK(!verify_topological_model(skip));

    TopologicalModel dup = model;
    dup.rho = {0, 1, 1};
    CHECK(!verify_topological_model(dup));

    TopologicalModel range = model;
    range.rho = {0, 1, 9};
    CHECK(!verify_topological_model(range));

    // Anchors must map back to their pattern vertices under the certificate.
    OddoCertificate p3 = make_cert(path_graph(3), path_graph(3), {0, 1, 2});
    TopologicalModel ok = tree_topological_model(p3);
    CHECK(verify_topological_model(ok, &p3));
    TopologicalModel astray = ok;
    std::swap(astray.rho[0], astray.rho[1]);
    CHECK(!verify_topological_model(astray, &p3));
}

}  // TEST_SUITE

}  // namespace
