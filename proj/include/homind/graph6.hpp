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
// Compact ASCII codec for simple graphs. A line is an order byte (order + 63)
// followed by the upper triangle of the adjacency matrix in column-major
// order, packed six bits per byte, each byte offset by 63. The optional
// ">>graph6<<" prefix is accepted on decode and never emitted.

#ifndef HOMIND_GRAPH6_HPP
#define HOMIND_GRAPH6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

// Decodes one graph. Throws ParseError with the byte offset of the first
// offending character.
Graph decode_graph6(std::string_view text);

std::string encode_graph6(const Graph& g);

// Decodes a whole file, one graph per non-empty line.
std::vector<Graph> decode_graph6_lines(std::string_view text);

}  // namespace homind

#endif  // HOMIND_GRAPH6_HPP
