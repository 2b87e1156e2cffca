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
// Contractors: rational combinations of series-parallel terms whose
// homomorphism matrices sum to the identity on two targets at once. With such
// a combination, hom counts from an edge contraction of any pattern can be
// computed without ever building the contracted graph.

#ifndef HOMIND_CONTRACTOR_HPP
#define HOMIND_CONTRACTOR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "homind/bilabelled.hpp"

namespace homind {

using Rational = boost::multiprecision::cpp_rational;

struct ContractorCombination {
    // Non-zero coefficients only, in basis order.
    std::vector<std::pair<SPTerm, Rational>> terms;
};

// Exact rationals with I_g = Σ α_S S_g and I_h = Σ α_S S_h over the
// series-parallel basis up to max_edges; re-substituted before returning.
// Throws NoContractorFound when the stacked system is infeasible.
ContractorCombination solve_contractor(const Graph& g, const Graph& h, int max_edges);

// Σ_S α_S · hom(soe(F⁻ ⊙ S), g) where F⁻ is f minus the edge uv, bilabelled
// at (u, v). Equals hom(contract_edge(f, uv), g) when α is a contractor for
// g; a non-integer total means α is not one.
BigInt simulate_contraction(const Graph& f, int u, int v, const Graph& g,
                            const ContractorCombination& alpha);

}  // namespace homind

#endif  // HOMIND_CONTRACTOR_HPP
