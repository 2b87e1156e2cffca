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
// Certificate reductions: removing isolated vertices and twins, restricting
// to one side of a cut vertex, the separator construction that shrinks the
// source across a small separator via a parity system over F2, iterated
// clique-sum reduction, and topological tree models. Every reduction
// re-verifies its output certificate instead of trusting the construction.

#ifndef HOMIND_REDUCTIONS_HPP
#define HOMIND_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homind/family.hpp"
#include "homind/oddo.hpp"

namespace homind {

// Dense bit matrix over F2; row r holds column c at bit c. At most 62
// columns so a row plus an augmented bit fit one word.
struct F2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> bits;

    F2Matrix() = default;
    F2Matrix(int m, int n);

    int get(int r, int c) const;
    void set(int r, int c, int value);
    int rank() const;
    // Basis of {x : Mx = 0} as column masks, deterministic order.
    std::vector<std::uint64_t> nullspace() const;
    // Smallest solution mask of Mx = rhs (bit r of rhs is row r's right side),
    // or nothing when the system is inconsistent.
    std::optional<std::uint64_t> least_solution(std::uint64_t rhs) const;
};

// Drops an isolated source vertex. The vertex must sit in a fibre over a
// non-isolated target vertex; over an isolated one it counts odd and its
// removal would flip the fibre count.
OddoCertificate remove_isolated(const OddoCertificate& cert, int v);

// Drops a pair of distinct source vertices in the same fibre with identical
// neighbourhoods; parities and fibre counts survive in pairs.
OddoCertificate remove_twins(const OddoCertificate& cert, int v, int w);

struct CutVertexReduction {
    int component_index = -1;          // position in components(F - s)
    std::uint64_t component_mask = 0;  // that component, as original F vertices
    std::vector<int> origin;           // piece vertex -> original F vertex
    OddoCertificate cert;              // plain certificate on F[C_i + s] -> G
    // Set exactly when s turned odd in the piece while even under phi: a
    // phi-odd vertex outside the piece sharing s's fibre.
    std::optional<int> odd_partner;
};

// Keeps the smallest component of F - s whose fibre slices outside phi(s)
// all hold an odd number of phi-odd vertices; parities inside the component
// are untouched and only s itself may flip.
CutVertexReduction cut_vertex_reduce(const OddoCertificate& cert, int s);

struct SeparatorInstance {
    OddoCertificate input;                            // the certificate reduced
    std::vector<int> separator;                       // S, ascending
    std::vector<std::vector<int>> components;         // C_1..C_n of F - S
    std::vector<std::vector<int>> target_components;  // D_1..D_m of G - phi(S)
    F2Matrix parity;                                  // P, rows D_j, columns C_i
    std::vector<int> chosen;                          // I, ascending indices into components
    std::vector<std::vector<int>> groups;             // partition of S by phi, ascending image
};

struct SeparatorReduction {
    SeparatorInstance instance;
    OddoCertificate reduced;  // plain certificate on F' -> G
};

// The union of the chosen components, ascending; F' lists these vertices
// first, followed by one vertex per group.
std::vector<int> chosen_vertices(const SeparatorInstance& instance);

// Builds the parity matrix P over the components of F - S and the target
// components of G - phi(S), picks the least index set I with P 1_I = 1 via
// the F2 system, and contracts each fibre slice of S to a point: edges of
// F[C] survive, v-T edges appear exactly when the connecting edge count in
// F is odd, and each T-T' edge takes the unique value that keeps T's edge
// count into the adjacent fibre consistent with its own fibre's odd count.
// The result is re-verified plain and checked to be a minor of F[C + S]
// plus a clique on S.
SeparatorReduction separator_reduce(const OddoCertificate& cert, std::uint64_t s_mask);

// Repeatedly removes the smallest separator of size at most s (smallest
// size, then least vertex mask): a single cut vertex goes through
// cut_vertex_reduce, anything else through separator_reduce. Requires the
// target (s+1)-connected so every separator qualifies; stops when none of
// size at most s is left and checks the survivor belongs to the family.
OddoCertificate reduce_clique_sum(const OddoCertificate& cert, const FamilySpec& family, int s);

struct TopologicalModel {
    Graph host;     // F
    Graph pattern;  // G
    std::vector<int> rho;                             // pattern vertex -> host vertex
    std::vector<std::pair<int, int>> pattern_edges;   // lexicographic
    std::vector<std::vector<int>> paths;              // host paths, parallel to pattern_edges
};

// Paths run between the right images, repeat no vertices, and two paths may
// only meet at the image of a shared endpoint. With a certificate, also
// checks phi(rho(v)) = v and that every rho(v) is phi-odd.
bool verify_topological_model(const TopologicalModel& model, const OddoCertificate* cert = nullptr);

// For a plain certificate from a tree: a topological model of the target in
// the source with phi(rho(v)) = v and every rho(v) phi-odd, built by
// induction on leaves of the target (all-leaf fibres peel off; otherwise the
// cut at an internal fibre vertex recurses, redirecting to the odd partner
// when the cut vertex flipped parity). Paths are the unique tree paths.
TopologicalModel tree_topological_model(const OddoCertificate& cert);

}  // namespace homind

#endif  // HOMIND_REDUCTIONS_HPP
