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
#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"

#include "homind/bilabelled.hpp"
#include "homind/contractor.hpp"
#include "homind/graph.hpp"
#include "homind/hom.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;

using Matrix = std::vector<std::vector<BigInt>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix out(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Matrix entrywise(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] *= b[i][j];
    return out;
}

// Minimal evaluator for the fully parenthesised term expressions.
BilabelledGraph eval_expression(const std::string& s, std::size_t& pos) {
    if (s.at(pos) == 'A') {
        ++pos;
        return atom_A();
    }
    REQUIRE(s.at(pos) == '(');
    ++pos;
    BilabelledGraph lhs = eval_expression(s, pos);
    char op = s.at(pos++);
    BilabelledGraph rhs = eval_expression(s, pos);
    REQUIRE(s.at(pos) == ')');
    ++pos;
    REQUIRE((op == '*' || op == '&'));
    return op == '*' ? series(lhs, rhs) : parallel(lhs, rhs);
}

BilabelledGraph eval_expression(const std::string& s) {
    std::size_t pos = 0;
    BilabelledGraph out = eval_expression(s, pos);
    REQUIRE(pos == s.size());
    return out;
}

bool same_graph(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }

TEST_SUITE("bilabelled") {

TEST_CASE("atom matrices are identity, adjacency and all-ones") {
    for (const Graph& g : {complete_graph(3), path_graph(4), cycle_graph(5)}) {
        HomMatrix mi = hom_matrix(atom_I(), g);
        HomMatrix ma = hom_matrix(atom_A(), g);
        HomMatrix mj = hom_matrix(atom_J(), g);
        for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y) {
                CHECK(mi.entries[x][y] == BigInt(x == y ? 1 : 0));
                CHECK(ma.entries[x][y] == BigInt(g.has_edge(x, y) ? 1 : 0));
                CHECK(mj.entries[x][y] == BigInt(1));
            }
    }
}

TEST_CASE("series multiplies and parallel multiplies entrywise") {
    Graph g = complete_graph(3);
    Graph h = path_graph(4);
    for (const Graph& target : {g, h})
        for (const SPTerm& t : enumerate_series_parallel(3)) {
            Matrix mt = hom_matrix(t.realization, target).entries;
            Matrix ma = hom_matrix(atom_A(), target).entries;
            CHECK(hom_matrix(series(t.realization, atom_A()), target).entries == matmul(mt, ma));
            CHECK(hom_matrix(series(atom_A(), t.realization), target).entries == matmul(ma, mt));
            CHECK(hom_matrix(parallel(t.realization, atom_A()), target).entries ==
                  entrywise(mt, ma));
        }
}

TEST_CASE("composition shapes") {
    BilabelledGraph p3 = series(atom_A(), atom_A());
    CHECK(same_graph(p3.graph, path_graph(3)));
    CHECK(p3.label_u == 0);
    CHECK(p3.label_v == 2);

    BilabelledGraph tri = parallel(p3, atom_A());
    CHECK(tri.graph.n == 3);
    CHECK(tri.graph.edge_count() == 3);

    // Duplicate label edges merge instead of doubling.
    BilabelledGraph aa = parallel(atom_A(), atom_A());
    CHECK(labelled_certificate(aa) == labelled_certificate(atom_A()));

    // Gluing the all-ones atom onto the identity merges its two vertices.
    BilabelledGraph ij = parallel(atom_I(), atom_J());
    CHECK(labelled_certificate(ij) == labelled_certificate(atom_I()));

    CHECK_THROWS_AS(parallel(atom_I(), atom_A()), PreconditionError);
    CHECK_THROWS_AS(parallel(atom_A(), atom_I()), PreconditionError);
    CHECK_THROWS_AS(BilabelledGraph(Graph(2), 0, 5), PreconditionError);
}

TEST_CASE("forgetting labels gives the plain homomorphism count") {
    Graph target = complete_graph(3);
    for (const SPTerm& t : enumerate_series_parallel(4)) {
        BigInt total(0);
        for (const auto& row : hom_matrix(t.realization, target).entries)
            for (const BigInt& e : row) total += e;
        CHECK(total == count_homs_big(soe_graph(t.realization), target));
    }
}

TEST_CASE("term enumeration is deduplicated, ordered and faithful") {
    CHECK(enumerate_series_parallel(0).empty());
    CHECK(enumerate_series_parallel(1).size() == 1);
    CHECK(enumerate_series_parallel(2).size() == 2);
    CHECK(enumerate_series_parallel(3).size() == 4);

    std::vector<SPTerm> terms = enumerate_series_parallel(4);
    CHECK(terms[0].expression == "A");
    std::vector<std::string> certs;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const SPTerm& t = terms[i];
        CHECK(t.realization.graph.edge_count() <= 4);
        CHECK(t.realization.label_u != t.realization.label_v);
        // The expression really describes the realization.
        CHECK(labelled_certificate(eval_expression(t.expression)) ==
              labelled_certificate(t.realization));
        certs.push_back(labelled_certificate(t.realization));
        if (i > 0) {
            int prev = terms[i - 1].realization.graph.edge_count();
            int cur = t.realization.graph.edge_count();
            CHECK(prev <= cur);
            if (prev == cur) CHECK(certs[i - 1] < certs[i]);
        }
    }
    std::sort(certs.begin(), certs.end());
    CHECK(std::adjacent_find(certs.begin(), certs.end()) == certs.end());

    CHECK_THROWS_AS(enumerate_series_parallel(9), BudgetError);
}

TEST_CASE("matrix budget") {
    CHECK_THROWS_AS(hom_matrix(atom_A(), petersen_graph(), 10.0), BudgetError);
}

TEST_CASE("contractors reproduce edge contraction") {
    // On K2 the squared adjacency matrix is already the identity.
    ContractorCombination unit = solve_contractor(complete_graph(2), complete_graph(2), 2);
    REQUIRE(unit.terms.size() == 1);
    CHECK(unit.terms[0].first.expression == "(A*A)");
    CHECK(unit.terms[0].second == Rational(1));

    Graph k3 = complete_graph(3);
    ContractorCombination alpha = solve_contractor(k3, k3, 4);
    std::vector<std::vector<Rational>> total(3, std::vector<Rational>(3, Rational(0)));
    for (const auto& [term, coeff] : alpha.terms) {
        Matrix m = hom_matrix(term.realization, k3).entries;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) total[x][y] += coeff * Rational(m[x][y]);
    }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(total[x][y] == Rational(x == y ? 1 : 0));

    CHECK(simulate_contraction(cycle_graph(3), 0, 1, k3, alpha) ==
          count_homs_big(contract_edge(cycle_graph(3), 0, 1), k3));
    CHECK(simulate_contraction(path_graph(4), 1, 2, k3, alpha) ==
          count_homs_big(contract_edge(path_graph(4), 1, 2), k3));
    CHECK(simulate_contraction(cycle_graph(4), 0, 1, k3, alpha) == BigInt(6));

    CHECK_THROWS_AS(simulate_contraction(path_graph(4), 0, 2, k3, alpha), PreconditionError);
}

TEST_CASE("degenerate targets admit no contractor") {
    CHECK_THROWS_AS(solve_contractor(complete_graph(1), complete_graph(1), 3), NoContractorFound);
    CHECK_THROWS_AS(solve_contractor(Graph(2), complete_graph(2), 4), NoContractorFound);
    // The ends of a path are twins, so every term matrix repeats their rows.
    CHECK_THROWS_AS(solve_contractor(path_graph(3), path_graph(3), 4), NoContractorFound);
}

}  // TEST_SUITE

}  // namespace
