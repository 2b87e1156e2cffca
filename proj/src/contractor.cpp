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

#include "homind/contractor.hpp"

#include <algorithm>
#include <optional>

namespace homind {

namespace {

// Appends the |V(g)|² identity-matrix equations for the basis over g.
void stack_equations(const std::vector<SPTerm>& basis, const Graph& g,
                     std::vector<std::vector<Rational>>& rows) {
    std::vector<HomMatrix> matrices;
    matrices.reserve(basis.size());
    for (const SPTerm& t : basis) matrices.push_back(hom_matrix(t.realization, g));
    for (int x = 0; x < g.n; ++x) {
        for (int y = 0; y < g.n; ++y) {
            std::vector<Rational> row(basis.size() + 1, Rational(0));
            for (std::size_t s = 0; s < basis.size(); ++s)
                row[s] = Rational(matrices[s].entries[x][y]);
            row[basis.size()] = Rational(x == y ? 1 : 0);
            rows.push_back(std::move(row));
        }
    }
}

// Gaussian elimination over the rationals; returns any exact solution of
// [rows | rhs], free variables set to zero, or nothing when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows,
                                                 std::size_t unknowns) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational lead = rows[rank][col];
        for (std::size_t c = col; c <= unknowns; ++c) rows[rank][c] /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][unknowns] != 0) return std::nullopt;
    std::vector<Rational> solution(unknowns, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) solution[pivot_col[r]] = rows[r][unknowns];
    return solution;
}

}  // namespace

ContractorCombination solve_contractor(const Graph& g, const Graph& h, int max_edges) {
    std::vector<SPTerm> basis = enumerate_series_parallel(max_edges);
    std::vector<std::vector<Rational>> rows;
    stack_equations(basis, g, rows);
    stack_equations(basis, h, rows);
    auto solution = solve_exact(rows, basis.size());
    if (!solution) throw NoContractorFound("no series-parallel contractor within the edge bound");
    // Re-substitution guard: the solve is trusted only after both identities
    // check out exactly.
    for (const Graph* target : {&g, &h}) {
        std::vector<std::vector<Rational>> sum(
            std::size_t(target->n), std::vector<Rational>(std::size_t(target->n), Rational(0)));
        for (std::size_t s = 0; s < basis.size(); ++s) {
            if ((*solution)[s] == 0) continue;
            HomMatrix m = hom_matrix(basis[s].realization, *target);
            for (int x = 0; x < target->n; ++x)
                for (int y = 0; y < target->n; ++y)
                    sum[x][y] += (*solution)[s] * Rational(m.entries[x][y]);
        }
        for (int x = 0; x < target->n; ++x)
            for (int y = 0; y < target->n; ++y)
                if (sum[x][y] != Rational(x == y ? 1 : 0))
                    throw Error("solve_contractor: re-substitution mismatch");
    }
    ContractorCombination combo;
    for (std::size_t s = 0; s < basis.size(); ++s)
        if ((*solution)[s] != 0) combo.terms.emplace_back(basis[s], (*solution)[s]);
    return combo;
}

BigInt simulate_contraction(const Graph& f, int u, int v, const Graph& g,
                            const ContractorCombination& alpha) {
    if (!f.has_edge(u, v)) throw PreconditionError("simulate_contraction: uv must be an edge");
    Graph reduced = f;
    reduced.remove_edge(u, v);
    BilabelledGraph f_minus(reduced, u, v);
    Rational total(0);
    for (const auto& [term, coeff] : alpha.terms) {
        Graph pattern = soe_graph(parallel(f_minus, term.realization));
        total += coeff * Rational(count_homs_big(pattern, g));
    }
    if (denominator(total) != 1)
        throw PreconditionError("simulate_contraction: combination is not a contractor for the target");
    return numerator(total);
}

}  // namespace homind
