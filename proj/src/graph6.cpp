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

#include "homind/graph6.hpp"

#include <sstream>

namespace homind {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void bad_byte(std::size_t offset, const char* what) {
    std::ostringstream msg;
    msg << "graph6: " << what << " at byte " << offset;
    throw ParseError(msg.str());
}

}  // namespace

Graph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        text.remove_prefix(kHeader.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) bad_byte(base, "empty input");
    unsigned first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 126) bad_byte(base, "order byte out of range");
    if (first == 126) bad_byte(base, "orders above 62 are not supported");
    int n = int(first) - 63;
    if (n > kMaxVertices) bad_byte(base, "order exceeds the vertex bound");
    std::size_t bits = std::size_t(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (text.size() - 1 != need) bad_byte(base + text.size(), "wrong payload length");
    Graph g(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            unsigned byte = static_cast<unsigned char>(text[1 + k / 6]);
            if (byte < 63 || byte > 126) bad_byte(base + 1 + k / 6, "payload byte out of range");
            unsigned group = byte - 63;
            if ((group >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (; k < need * 6; ++k) {
        unsigned byte = static_cast<unsigned char>(text[1 + k / 6]);
        if (byte < 63 || byte > 126) bad_byte(base + 1 + k / 6, "payload byte out of range");
        if (((byte - 63) >> (5 - k % 6)) & 1) bad_byte(base + 1 + k / 6, "nonzero padding");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    out.push_back(char(g.n + 63));
    std::size_t bits = std::size_t(g.n) * (g.n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    std::string payload(need, char(63));
    std::size_t k = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.has_edge(u, v)) payload[k / 6] += char(1 << (5 - k % 6));
    out += payload;
    return out;
}

std::vector<Graph> decode_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(decode_graph6(line));
        pos = end + 1;
    }
    return out;
}

}  // namespace homind
