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
// Parity classification of homomorphisms and oddomorphism machinery. A source
// vertex is Odd (resp. Even) when, for every neighbour w of its image, the
// number of its neighbours mapping to w is odd (resp. even); mixed parities
// leave it Undefined. A homomorphism is an oddomorphism when every vertex is
// classified and every fibre holds an odd number of Odd vertices; a weak
// oddomorphism restricts to one on a subgraph of the source, still onto the
// whole target. Vertices whose image has no neighbours satisfy both parity
// readings; they count as Odd so that identity maps verify on every graph.

#ifndef HOMIND_ODDO_HPP
#define HOMIND_ODDO_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homind/hom.hpp"

namespace homind {

enum class Parity : unsigned char { Odd, Even, Undefined };

struct ParityReport {
    std::vector<Parity> vertex_parity;  // by source vertex
    std::vector<int> fibre_odd_count;   // by target vertex
};

struct OddoCertificate {
    Homomorphism phi;
    ParityReport report;  // parity of phi on its full source
    bool plain = false;
    // Weak witness: kept source vertices and edges. Absent when plain.
    std::optional<std::uint64_t> weak_vertices;
    std::optional<std::vector<std::pair<int, int>>> weak_edges;
};

ParityReport classify_parity(const Homomorphism& phi);

// Certificate when phi itself is an oddomorphism. Odd fibre counts force
// every fibre non-empty, hence surjectivity.
std::optional<OddoCertificate> verify_oddomorphism(const Homomorphism& phi);

// Sweeps subgraphs of the source: edge subsets from the full set downwards,
// with the vertex phase resolved analytically (vertices isolated by the edge
// choice classify Even, which matches deleting them; fibres over isolated
// target vertices keep their lowest-index vertices, oddly many).
std::optional<OddoCertificate> verify_weak_oddomorphism(const Homomorphism& phi,
                                                        double budget = double(1 << 24));

// First certificate over homomorphisms in lexicographic map order, pruned by
// the requirement that every fibre ends up non-empty.
std::optional<OddoCertificate> search_oddomorphism(const Graph& f, const Graph& g, bool weak,
                                                   double budget = 1e8);

struct RestrictionResult {
    OddoCertificate cert;            // on densely relabelled graphs
    std::vector<int> source_origin;  // new source vertex -> original F vertex
    std::vector<int> target_origin;  // new target vertex -> original G vertex
};

// Restriction of a certificate to the induced target subgraph on target_mask:
// the source becomes F[phi^-1(mask)]. The result is always at least weak; it
// stays plain unless some target vertex loses all its neighbours while its
// fibre has even size.
RestrictionResult restrict_oddomorphism(const OddoCertificate& cert, std::uint64_t target_mask);

}  // namespace homind

#endif  // HOMIND_ODDO_HPP
