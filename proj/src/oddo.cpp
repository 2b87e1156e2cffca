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

#include "homind/oddo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace homind {

namespace {

void require_valid(const Homomorphism& phi) {
    if (!is_homomorphism(phi.source, phi.target, phi.map))
        throw PreconditionError("not a homomorphism");
}

std::vector<std::uint64_t> fibres(const Homomorphism& phi) {
    std::vector<std::uint64_t> fib(std::size_t(std::max(phi.target.n, 1)), 0);
    for (int a = 0; a < phi.source.n; ++a) fib[phi.map[a]] |= std::uint64_t(1) << a;
    fib.resize(std::size_t(phi.target.n));
    return fib;
}

bool all_fibre_counts_odd(const ParityReport& report) {
    for (int c : report.fibre_odd_count)
        if (c % 2 == 0) return false;
    return true;
}

bool no_undefined(const ParityReport& report) {
    for (Parity p : report.vertex_parity)
        if (p == Parity::Undefined) return false;
    return true;
}

}  // namespace

ParityReport classify_parity(const Homomorphism& phi) {
    require_valid(phi);
    const Graph& f = phi.source;
    const Graph& g = phi.target;
    std::vector<std::uint64_t> fib = fibres(phi);
    ParityReport report;
    report.vertex_parity.assign(std::size_t(f.n), Parity::Odd);
    report.fibre_odd_count.assign(std::size_t(g.n), 0);
    for (int a = 0; a < f.n; ++a) {
        std::uint64_t images = g.adj[phi.map[a]];
        bool saw_odd = false, saw_even = false;
        std::uint64_t rest = images;
        while (rest) {
            int w = __builtin_ctzll(rest);
            rest &= rest - 1;
            int count = __builtin_popcountll(f.adj[a] & fib[w]);
            (count % 2 ? saw_odd : saw_even) = true;
        }
        // No neighbouring fibre at all: both readings hold; counts as Odd.
        Parity p = Parity::Odd;
        if (saw_odd && saw_even)
            p = Parity::Undefined;
        else if (saw_even)
            p = Parity::Even;
        report.vertex_parity[a] = p;
        if (p == Parity::Odd) ++report.fibre_odd_count[phi.map[a]];
    }
    return report;
}

std::optional<OddoCertificate> verify_oddomorphism(const Homomorphism& phi) {
    ParityReport report = classify_parity(phi);
    if (!no_undefined(report) || !all_fibre_counts_odd(report)) return std::nullopt;
    OddoCertificate cert;
    cert.phi = phi;
    cert.report = std::move(report);
    cert.plain = true;
    return cert;
}

std::optional<OddoCertificate> verify_weak_oddomorphism(const Homomorphism& phi, double budget) {
    if (auto plain = verify_oddomorphism(phi)) return plain;
    const Graph& f = phi.source;
    const Graph& g = phi.target;
    std::vector<std::uint64_t> fib = fibres(phi);

    // Fibres over isolated target vertices are edgeless (their vertices have
    // no edges in the source at all), so the only freedom is how many of them
    // to keep; keep the lowest-indexed odd-sized prefix.
    std::uint64_t kept = f.vertex_mask();
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v] != 0) continue;
        int size = __builtin_popcountll(fib[v]);
        if (size == 0) return std::nullopt;  // no subgraph restores surjectivity
        if (size % 2 == 0) {
            std::uint64_t rest = fib[v];
            int drop = 0;
            while (rest) {
                drop = __builtin_ctzll(rest);
                rest &= rest - 1;
            }
            kept &= ~(std::uint64_t(1) << drop);
        }
    }

    auto edge_list = f.edges();
    int m = int(edge_list.size());
    if (m > 62 || std::pow(2.0, double(m)) > budget)
        throw BudgetError("verify_weak_oddomorphism: edge-subset sweep exceeds the budget");

    // incident[a] lists, per neighbour w of phi(a), the mask of edge indices
    // joining a to the fibre of w.
    std::vector<std::vector<std::uint64_t>> incident(std::size_t(f.n));
    std::vector<std::vector<int>> nbr_targets(std::size_t(f.n));
    for (int a = 0; a < f.n; ++a) {
        std::uint64_t images = g.adj[phi.map[a]];
        while (images) {
            int w = __builtin_ctzll(images);
            images &= images - 1;
            nbr_targets[a].push_back(w);
            incident[a].push_back(0);
        }
    }
    for (int e = 0; e < m; ++e) {
        auto [x, y] = edge_list[e];
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            for (std::size_t i = 0; i < nbr_targets[a].size(); ++i)
                if ((fib[nbr_targets[a][i]] >> b) & 1)
                    incident[a][i] |= std::uint64_t(1) << e;
        }
    }

    std::vector<int> odd_in_fibre(std::size_t(std::max(g.n, 1)));
    for (std::uint64_t mask = (m == 62 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1);;
         --mask) {
        bool ok = true;
        std::fill(odd_in_fibre.begin(), odd_in_fibre.end(), 0);
        for (int a = 0; a < f.n && ok; ++a) {
            if (!((kept >> a) & 1)) continue;
            if (nbr_targets[a].empty()) {
                ++odd_in_fibre[phi.map[a]];  // isolated target: counts Odd
                continue;
            }
            int first = __builtin_popcountll(mask & incident[a][0]) & 1;
            for (std::size_t i = 1; i < nbr_targets[a].size(); ++i)
                if ((__builtin_popcountll(mask & incident[a][i]) & 1) != first) {
                    ok = false;
                    break;
                }
            if (ok && first) ++odd_in_fibre[phi.map[a]];
        }
        if (ok) {
            for (int v = 0; v < g.n; ++v)
                if (odd_in_fibre[v] % 2 == 0) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            OddoCertificate cert;
            cert.phi = phi;
            cert.report = classify_parity(phi);
            cert.plain = false;
            cert.weak_vertices = kept;
            std::vector<std::pair<int, int>> kept_edges;
            for (int e = 0; e < m; ++e)
                if ((mask >> e) & 1) kept_edges.push_back(edge_list[e]);
            cert.weak_edges = std::move(kept_edges);
            return cert;
        }
        if (mask == 0) break;
    }
    return std::nullopt;
}

std::optional<OddoCertificate> search_oddomorphism(const Graph& f, const Graph& g, bool weak,
                                                   double budget) {
    if (std::pow(double(std::max(g.n, 1)), double(f.n)) > budget)
        throw BudgetError("search_oddomorphism: homomorphism space exceeds the budget");
    if (g.n == 0) {
        if (f.n > 0) return std::nullopt;
        Homomorphism phi{f, g, {}};
        return verify_oddomorphism(phi);
    }
    std::vector<int> image(std::size_t(f.n), -1);
    std::vector<int> fibre_size(std::size_t(g.n), 0);
    int empty_fibres = g.n;
    std::optional<OddoCertificate> found;
    std::function<void(int)> place = [&](int a) {
        if (found) return;
        if (a == f.n) {
            if (empty_fibres > 0) return;
            Homomorphism phi{f, g, image};
            found = weak ? verify_weak_oddomorphism(phi) : verify_oddomorphism(phi);
            return;
        }
        // Every fibre must end non-empty; unassigned vertices are the only
        // ones left to fill them.
        if (empty_fibres > f.n - a) return;
        for (int c = 0; c < g.n && !found; ++c) {
            bool ok = true;
            std::uint64_t nb = f.adj[a];
            while (nb) {
                int b = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (b < a && !g.has_edge(c, image[b])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[a] = c;
            if (fibre_size[c]++ == 0) --empty_fibres;
            place(a + 1);
            if (--fibre_size[c] == 0) ++empty_fibres;
            image[a] = -1;
        }
    };
    place(0);
    return found;
}

RestrictionResult restrict_oddomorphism(const OddoCertificate& cert, std::uint64_t target_mask) {
    require_valid(cert.phi);
    const Graph& f = cert.phi.source;
    const Graph& g = cert.phi.target;
    target_mask &= g.vertex_mask();
    std::uint64_t preimage = 0;
    for (int a = 0; a < f.n; ++a)
        if ((target_mask >> cert.phi.map[a]) & 1) preimage |= std::uint64_t(1) << a;

    RestrictionResult out;
    Graph f_sub = induced_subgraph(f, preimage, &out.source_origin);
    Graph g_sub = induced_subgraph(g, target_mask, &out.target_origin);
    std::vector<int> g_new(std::size_t(g.n), -1);
    for (std::size_t i = 0; i < out.target_origin.size(); ++i) g_new[out.target_origin[i]] = int(i);
    std::vector<int> map(std::size_t(f_sub.n));
    for (int i = 0; i < f_sub.n; ++i) map[i] = g_new[cert.phi.map[out.source_origin[i]]];
    Homomorphism phi{f_sub, g_sub, map};

    if (auto plain = verify_oddomorphism(phi)) {
        out.cert = std::move(*plain);
        return out;
    }
    // Always at least weak: restrict the plain witness, then trim fibres of
    // target vertices that lost all neighbours.
    auto weak = verify_weak_oddomorphism(phi);
    if (!weak) throw PreconditionError("restrict_oddomorphism: input certificate does not restrict");
    out.cert = std::move(*weak);
    return out;
}

}  // namespace homind
