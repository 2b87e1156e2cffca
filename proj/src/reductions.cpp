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

#include "homind/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homind/canonical.hpp"
#include "homind/classes.hpp"
#include "homind/util.hpp"

namespace homind {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

// Restriction of phi to the source vertices in keep, re-verified. origin_out
// receives piece index -> original index when non-null.
std::optional<OddoCertificate> restricted_cert(const Homomorphism& phi, std::uint64_t keep,
                                               std::vector<int>* origin_out) {
    std::vector<int> origin;
    Graph piece = induced_subgraph(phi.source, keep, &origin);
    std::vector<int> map(piece.n);
    for (int i = 0; i < piece.n; ++i) map[i] = phi.map[origin[i]];
    if (origin_out) *origin_out = std::move(origin);
    return verify_oddomorphism({std::move(piece), phi.target, std::move(map)});
}

int parity_of_slice(const OddoCertificate& cert, std::uint64_t slice, int image) {
    int odd = 0;
    while (slice) {
        int a = __builtin_ctzll(slice);
        slice &= slice - 1;
        if (cert.phi.map[a] == image && cert.report.vertex_parity[a] == Parity::Odd) odd ^= 1;
    }
    return odd;
}

bool family_contains(const Graph& g, const FamilySpec& family) {
    if (family.max_n >= 0 && g.n > family.max_n) return false;
    if (family.max_m >= 0 && g.edge_count() > family.max_m) return false;
    switch (family.kind) {
        case FamilySpec::Kind::AllGraphs:
            return true;
        case FamilySpec::Kind::AllConnected:
            return is_connected(g);
        case FamilySpec::Kind::Trees:
            return is_tree(g);
        case FamilySpec::Kind::Planar:
            return class_member(g, ClassPredicate{"planar", 0});
        case FamilySpec::Kind::PredicateFiltered:
            return class_member(g, parse_class_predicate(family.predicate));
        case FamilySpec::Kind::UserCorpus:
            for (const Graph& c : family.corpus)
                if (are_isomorphic(g, c)) return true;
            return false;
    }
    return false;
}

// Unique path in a tree, endpoints included.
std::vector<int> tree_path(const Graph& f, int from, int to) {
    std::vector<int> parent(f.n, -2);
    parent[from] = -1;
    std::vector<int> queue{from};
    for (std::size_t h = 0; h < queue.size() && parent[to] == -2; ++h) {
        std::uint64_t nb = f.adj[queue[h]];
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (parent[w] == -2) {
                parent[w] = queue[h];
                queue.push_back(w);
            }
        }
    }
    if (parent[to] == -2) throw Error("tree_path: endpoints are disconnected");
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// The model map in the certificate's own coordinates; paths are recovered
// later as unique tree paths.
std::vector<int> model_rho(const OddoCertificate& cert) {
    const Graph& f = cert.phi.source;
    const Graph& g = cert.phi.target;
    if (f.n == 1) {
        if (g.n != 1) throw Error("tree model: surjectivity violated at the base case");
        return {0};
    }
    int v = -1;
    for (int u = 0; u < g.n && v < 0; ++u)
        if (g.degree(u) == 1) v = u;
    if (v < 0) throw Error("tree model: target has no leaf");
    std::uint64_t fibre = 0;
    for (int a = 0; a < f.n; ++a)
        if (cert.phi.map[a] == v) fibre |= bit(a);

    bool all_leaves = true;
    for (std::uint64_t rest = fibre; rest; rest &= rest - 1)
        if (f.degree(__builtin_ctzll(rest)) != 1) all_leaves = false;

    if (all_leaves) {
        std::vector<int> origin;
        Graph f2 = induced_subgraph(f, f.vertex_mask() & ~fibre, &origin);
        Graph g2 = delete_vertex(g, v);
        std::vector<int> map2(f2.n);
        for (int i = 0; i < f2.n; ++i) {
            int y = cert.phi.map[origin[i]];
            map2[i] = y < v ? y : y - 1;
        }
        auto sub = verify_oddomorphism({std::move(f2), std::move(g2), std::move(map2)});
        if (!sub) throw Error("tree model: leaf-peeled certificate failed verification");
        std::vector<int> sub_rho = model_rho(*sub);
        std::vector<int> rho(g.n, -1);
        for (std::size_t u2 = 0; u2 < sub_rho.size(); ++u2) {
            int u = int(u2) < v ? int(u2) : int(u2) + 1;
            rho[u] = origin[sub_rho[u2]];
        }
        int w = __builtin_ctzll(g.adj[v]);
        std::uint64_t cand = f.adj[rho[w]] & fibre;
        if (!cand) throw Error("tree model: odd image has no neighbour in the leaf fibre");
        rho[v] = __builtin_ctzll(cand);
        return rho;
    }

    int a = -1;
    for (std::uint64_t rest = fibre; rest && a < 0; rest &= rest - 1) {
        int x = __builtin_ctzll(rest);
        if (f.degree(x) >= 2) a = x;
    }
    CutVertexReduction red = cut_vertex_reduce(cert, a);
    std::vector<int> sub_rho = model_rho(red.cert);
    std::vector<int> rho(g.n);
    for (int u = 0; u < g.n; ++u) rho[u] = red.origin[sub_rho[u]];
    if (rho[v] == a && cert.report.vertex_parity[a] == Parity::Even) {
        if (!red.odd_partner) throw Error("tree model: missing odd partner for a flipped cut vertex");
        rho[v] = *red.odd_partner;
    }
    return rho;
}

}  // namespace

F2Matrix::F2Matrix(int m, int n) : rows(m), cols(n), bits(std::size_t(m), 0) {
    if (m < 0 || n < 0 || n > 62) throw PreconditionError("F2Matrix dimensions out of range");
}

int F2Matrix::get(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw PreconditionError("F2Matrix index out of range");
    return int((bits[r] >> c) & 1);
}

void F2Matrix::set(int r, int c, int value) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw PreconditionError("F2Matrix index out of range");
    if (value & 1)
        bits[r] |= bit(c);
    else
        bits[r] &= ~bit(c);
}

namespace {

// Row echelon in place; returns the pivot columns. Entries above and below
// each pivot are cleared.
std::vector<int> eliminate(std::vector<std::uint64_t>& m, int rows, int cols) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows && pivot < 0; ++i)
            if ((m[i] >> c) & 1) pivot = i;
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = 0; i < rows; ++i)
            if (i != r && ((m[i] >> c) & 1)) m[i] ^= m[r];
        pivot_col.push_back(c);
        ++r;
    }
    return pivot_col;
}

}  // namespace

int F2Matrix::rank() const {
    std::vector<std::uint64_t> m = bits;
    return int(eliminate(m, rows, cols).size());
}

std::vector<std::uint64_t> F2Matrix::nullspace() const {
    std::vector<std::uint64_t> m = bits;
    std::vector<int> pivot_col = eliminate(m, rows, cols);
    std::uint64_t pivots = 0;
    for (int c : pivot_col) pivots |= bit(c);
    std::vector<std::uint64_t> basis;
    for (int c = 0; c < cols; ++c) {
        if ((pivots >> c) & 1) continue;
        std::uint64_t v = bit(c);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if ((m[i] >> c) & 1) v |= bit(pivot_col[i]);
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::uint64_t> F2Matrix::least_solution(std::uint64_t rhs) const {
    std::vector<std::uint64_t> m = bits;
    for (int i = 0; i < rows; ++i)
        if ((rhs >> i) & 1) m[i] |= bit(cols);
    std::vector<int> pivot_col = eliminate(m, rows, cols);
    for (int i = int(pivot_col.size()); i < rows; ++i)
        if (m[i]) return std::nullopt;
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        if ((m[i] >> cols) & 1) x |= bit(pivot_col[i]);
    // XOR basis over the nullspace, distinct leading bits, then greedy
    // clearing from the top yields the least element of the coset.
    std::vector<std::uint64_t> top(std::size_t(cols), 0);
    for (std::uint64_t b : nullspace()) {
        while (b) {
            int t = 63 - __builtin_clzll(b);
            if (!top[t]) {
                top[t] = b;
                break;
            }
            b ^= top[t];
        }
    }
    for (int t = cols - 1; t >= 0; --t)
        if (top[t] && ((x >> t) & 1)) x ^= top[t];
    return x;
}

OddoCertificate remove_isolated(const OddoCertificate& cert, int v) {
    if (!cert.plain) throw PreconditionError("remove_isolated needs a plain certificate");
    const Graph& f = cert.phi.source;
    if (v < 0 || v >= f.n) throw PreconditionError("remove_isolated: vertex out of range");
    if (f.degree(v) != 0) throw PreconditionError("remove_isolated: vertex is not isolated");
    if (cert.phi.target.degree(cert.phi.map[v]) == 0)
        throw PreconditionError(
            "remove_isolated: the image of v is isolated, so v counts odd and removing it flips "
            "its fibre");
    auto out = restricted_cert(cert.phi, f.vertex_mask() & ~bit(v), nullptr);
    if (!out) throw Error("remove_isolated: reduced certificate failed verification");
    return *out;
}

OddoCertificate remove_twins(const OddoCertificate& cert, int v, int w) {
    if (!cert.plain) throw PreconditionError("remove_twins needs a plain certificate");
    const Graph& f = cert.phi.source;
    if (v < 0 || v >= f.n || w < 0 || w >= f.n)
        throw PreconditionError("remove_twins: vertex out of range");
    if (v == w) throw PreconditionError("remove_twins: vertices must be distinct");
    if (cert.phi.map[v] != cert.phi.map[w])
        throw PreconditionError("remove_twins: vertices sit in different fibres");
    if (f.adj[v] != f.adj[w]) throw PreconditionError("remove_twins: neighbourhoods differ");
    auto out = restricted_cert(cert.phi, f.vertex_mask() & ~bit(v) & ~bit(w), nullptr);
    if (!out) throw Error("remove_twins: reduced certificate failed verification");
    return *out;
}

CutVertexReduction cut_vertex_reduce(const OddoCertificate& cert, int s) {
    if (!cert.plain) throw PreconditionError("cut_vertex_reduce needs a plain certificate");
    const Graph& f = cert.phi.source;
    const Graph& g = cert.phi.target;
    if (s < 0 || s >= f.n) throw PreconditionError("cut_vertex_reduce: vertex out of range");
    std::vector<std::uint64_t> comps = components(f, f.vertex_mask() & ~bit(s));
    if (comps.size() < 2) throw PreconditionError("cut_vertex_reduce: s does not separate the source");
    int gs = cert.phi.map[s];
    if (components(g, g.vertex_mask() & ~bit(gs)).size() != 1)
        throw PreconditionError(
            "cut_vertex_reduce: the target minus the image of s must be non-empty and connected");

    // First component whose fibre slices outside phi(s) all hold oddly many
    // phi-odd vertices; the lemma's claim guarantees one exists.
    int chosen = -1;
    for (std::size_t i = 0; i < comps.size() && chosen < 0; ++i) {
        bool ok = true;
        for (int x = 0; x < g.n && ok; ++x) {
            if (x == gs) continue;
            if (!parity_of_slice(cert, comps[i], x)) ok = false;
        }
        if (ok) chosen = int(i);
    }
    if (chosen < 0) throw Error("cut_vertex_reduce: no component satisfies the slice parities");

    std::vector<int> origin;
    auto piece_cert = restricted_cert(cert.phi, comps[chosen] | bit(s), &origin);
    if (!piece_cert) throw Error("cut_vertex_reduce: piece certificate failed verification");

    int s_piece = -1;
    for (std::size_t i = 0; i < origin.size(); ++i)
        if (origin[i] == s) s_piece = int(i);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        if (int(i) == s_piece) continue;
        if (piece_cert->report.vertex_parity[i] != cert.report.vertex_parity[origin[i]])
            throw Error("cut_vertex_reduce: a component vertex changed parity");
    }

    std::optional<int> partner;
    bool odd_in_piece = piece_cert->report.vertex_parity[s_piece] == Parity::Odd;
    bool odd_in_full = cert.report.vertex_parity[s] == Parity::Odd;
    if (odd_in_piece && !odd_in_full) {
        for (int a = 0; a < f.n && !partner; ++a) {
            if (a == s || ((comps[chosen] >> a) & 1)) continue;
            if (cert.phi.map[a] == gs && cert.report.vertex_parity[a] == Parity::Odd) partner = a;
        }
        if (!partner) throw Error("cut_vertex_reduce: odd partner missing");
    }

    CutVertexReduction out;
    out.component_index = chosen;
    out.component_mask = comps[chosen];
    out.origin = std::move(origin);
    out.cert = std::move(*piece_cert);
    out.odd_partner = partner;
    return out;
}

std::vector<int> chosen_vertices(const SeparatorInstance& instance) {
    std::vector<int> out;
    for (int i : instance.chosen)
        out.insert(out.end(), instance.components[i].begin(), instance.components[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

SeparatorReduction separator_reduce(const OddoCertificate& cert, std::uint64_t s_mask) {
    if (!cert.plain) throw PreconditionError("separator_reduce needs a plain certificate");
    const Graph& f = cert.phi.source;
    const Graph& g = cert.phi.target;
    s_mask &= f.vertex_mask();
    std::uint64_t phi_s = 0;
    for (std::uint64_t rest = s_mask; rest; rest &= rest - 1)
        phi_s |= bit(cert.phi.map[__builtin_ctzll(rest)]);
    std::vector<std::uint64_t> comps = components(f, f.vertex_mask() & ~s_mask);
    std::vector<std::uint64_t> tcomps = components(g, g.vertex_mask() & ~phi_s);
    int n = int(comps.size());
    int m = int(tcomps.size());
    if (m == 0)
        throw PreconditionError("separator_reduce: the separator image covers the whole target");
    if (n <= m)
        throw PreconditionError(
            "separator_reduce: needs more source components than target components");

    // P rows are target components, columns source components; constancy
    // across each target component certifies the input.
    F2Matrix parity(m, n);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            int val = -1;
            for (std::uint64_t xs = tcomps[j]; xs; xs &= xs - 1) {
                int odd = parity_of_slice(cert, comps[i], __builtin_ctzll(xs));
                if (val < 0)
                    val = odd;
                else if (val != odd)
                    throw PreconditionError(
                        "separator_reduce: parity matrix ill-defined; the certificate is broken");
            }
            parity.set(j, i, val);
        }
    }
    for (int j = 0; j < m; ++j)
        if (!(__builtin_popcountll(parity.bits[j]) & 1))
            throw Error("separator_reduce: a parity row dropped the all-ones solution");

    std::uint64_t rhs = (m == 64 ? ~std::uint64_t(0) : bit(m) - 1);
    std::optional<std::uint64_t> imask = parity.least_solution(rhs);
    if (!imask) throw Error("separator_reduce: parity system inconsistent");
    if (*imask == 0 || *imask == bit(n) - 1)
        throw Error("separator_reduce: the chosen set must be a proper non-empty subset");

    SeparatorInstance inst;
    inst.input = cert;
    inst.separator = mask_to_vertices(s_mask);
    for (std::uint64_t c : comps) inst.components.push_back(mask_to_vertices(c));
    for (std::uint64_t d : tcomps) inst.target_components.push_back(mask_to_vertices(d));
    inst.parity = parity;
    inst.chosen = mask_to_vertices(*imask);
    std::vector<std::uint64_t> group_masks;
    for (int y = 0; y < g.n; ++y) {
        std::uint64_t group = 0;
        for (std::uint64_t rest = s_mask; rest; rest &= rest - 1) {
            int v = __builtin_ctzll(rest);
            if (cert.phi.map[v] == y) group |= bit(v);
        }
        if (group) {
            inst.groups.push_back(mask_to_vertices(group));
            group_masks.push_back(group);
        }
    }

    // F' lists the chosen component vertices first, then one vertex per
    // group; a component-to-group edge appears when the connecting edge
    // count in F is odd.
    std::vector<int> cvec = chosen_vertices(inst);
    std::uint64_t cmask = 0;
    for (int v : cvec) cmask |= bit(v);
    int nc = int(cvec.size());
    int ng = int(group_masks.size());
    Graph reduced(nc + ng);
    std::vector<int> map2(std::size_t(nc + ng));
    std::vector<int> pos(std::size_t(f.n), -1);
    for (int i = 0; i < nc; ++i) {
        pos[cvec[i]] = i;
        map2[i] = cert.phi.map[cvec[i]];
    }
    for (int k = 0; k < ng; ++k)
        map2[nc + k] = cert.phi.map[inst.groups[k][0]];
    for (int i = 0; i < nc; ++i) {
        std::uint64_t nb = f.adj[cvec[i]] & cmask;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (pos[u] > i) reduced.add_edge(i, pos[u]);
        }
        for (int k = 0; k < ng; ++k)
            if (__builtin_popcountll(f.adj[cvec[i]] & group_masks[k]) & 1)
                reduced.add_edge(i, nc + k);
    }
    // Each T's parity is pinned by its fibre count (odd iff the chosen
    // components hold evenly many odd vertices over its image), and its edge
    // count into F[C] is pinned by the v-T rule; the T-T' bit makes up the
    // difference. Counting only F-edges inside S here would drop the
    // discarded components' contribution and break the parity.
    auto odd_in_c = [&](int y) {
        int count = 0;
        for (int v : cvec)
            if (cert.phi.map[v] == y && cert.report.vertex_parity[v] == Parity::Odd) ++count;
        return count & 1;
    };
    auto edges_into_c = [&](int k, int x) {
        int sum = 0;
        for (int v : cvec)
            if (cert.phi.map[v] == x) sum ^= __builtin_popcountll(f.adj[v] & group_masks[k]) & 1;
        return sum;
    };
    for (int k = 0; k < ng; ++k) {
        int yk = map2[nc + k];
        for (int l = k + 1; l < ng; ++l) {
            int yl = map2[nc + l];
            if (!g.has_edge(yk, yl)) continue;
            int forced = (1 ^ odd_in_c(yk)) ^ edges_into_c(k, yl);
            if (forced != ((1 ^ odd_in_c(yl)) ^ edges_into_c(l, yk)))
                throw Error("separator_reduce: the forced slice edges are inconsistent");
            if (forced) reduced.add_edge(nc + k, nc + l);
        }
    }

    auto out_cert = verify_oddomorphism({reduced, g, map2});
    if (!out_cert) throw Error("separator_reduce: reduced certificate failed verification");
    if (reduced.n >= f.n) throw Error("separator_reduce: order did not decrease");

    std::vector<int> horigin;
    Graph host = induced_subgraph(f, cmask | s_mask, &horigin);
    for (int i = 0; i < host.n; ++i) {
        if (!((s_mask >> horigin[i]) & 1)) continue;
        for (int j = i + 1; j < host.n; ++j)
            if ((s_mask >> horigin[j]) & 1) host.add_edge(i, j);
    }
    if (!has_minor(host, reduced))
        throw Error("separator_reduce: result is not a minor of the clique-summed piece");

    return SeparatorReduction{std::move(inst), std::move(*out_cert)};
}

OddoCertificate reduce_clique_sum(const OddoCertificate& cert, const FamilySpec& family, int s) {
    if (!cert.plain) throw PreconditionError("reduce_clique_sum needs a plain certificate");
    if (s < 0) throw PreconditionError("reduce_clique_sum: separator bound must be non-negative");
    if (!is_k_connected(cert.phi.target, s + 1))
        throw PreconditionError("reduce_clique_sum: target must be (s+1)-connected");

    OddoCertificate current = cert;
    int budget = cert.phi.source.n + 1;
    for (int round = 0;; ++round) {
        if (round > budget) throw BudgetError("reduce_clique_sum: iteration budget exceeded");
        Graph f = current.phi.source;
        std::optional<std::uint64_t> sep;
        for (int size = 0; size <= s && size < f.n && !sep; ++size) {
            for (std::uint64_t mask = 0; mask <= f.vertex_mask() && !sep; ++mask) {
                if (__builtin_popcountll(mask) != size) continue;
                if (components(f, f.vertex_mask() & ~mask).size() >= 2) sep = mask;
            }
        }
        if (!sep) break;
        if (__builtin_popcountll(*sep) == 1)
            current = cut_vertex_reduce(current, __builtin_ctzll(*sep)).cert;
        else
            current = separator_reduce(current, *sep).reduced;
        if (current.phi.source.n >= f.n) throw Error("reduce_clique_sum: order did not decrease");
    }
    if (!family_contains(current.phi.source, family))
        throw PreconditionError(
            "reduce_clique_sum: the reduced source is outside the family; the input was not in "
            "the closure");
    return current;
}

bool verify_topological_model(const TopologicalModel& model, const OddoCertificate* cert) {
    const Graph& f = model.host;
    const Graph& g = model.pattern;
    if (int(model.rho.size()) != g.n) return false;
    if (model.pattern_edges != g.edges()) return false;
    if (model.paths.size() != model.pattern_edges.size()) return false;
    for (int u = 0; u < g.n; ++u)
        if (model.rho[u] < 0 || model.rho[u] >= f.n) return false;
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w)
            if (model.rho[u] == model.rho[w]) return false;

    std::vector<std::uint64_t> path_masks(model.paths.size(), 0);
    for (std::size_t k = 0; k < model.paths.size(); ++k) {
        const std::vector<int>& path = model.paths[k];
        auto [u, w] = model.pattern_edges[k];
        if (path.size() < 2) return false;
        if (path.front() != model.rho[u] || path.back() != model.rho[w]) return false;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (path[i] < 0 || path[i] >= f.n) return false;
            if (path_masks[k] & bit(path[i])) return false;
            path_masks[k] |= bit(path[i]);
            if (i + 1 < path.size() && !f.has_edge(path[i], path[i + 1])) return false;
        }
    }
    // Two paths may only meet at the image of a pattern vertex they share.
    for (std::size_t k = 0; k < model.paths.size(); ++k) {
        for (std::size_t l = k + 1; l < model.paths.size(); ++l) {
            std::uint64_t shared = path_masks[k] & path_masks[l];
            auto [u1, w1] = model.pattern_edges[k];
            auto [u2, w2] = model.pattern_edges[l];
            std::uint64_t allowed = 0;
            if (u1 == u2 || u1 == w2) allowed |= bit(model.rho[u1]);
            if (w1 == u2 || w1 == w2) allowed |= bit(model.rho[w1]);
            if (shared & ~allowed) return false;
        }
    }
    if (cert) {
        if (!(cert->phi.source == f) || !(cert->phi.target == g)) return false;
        for (int u = 0; u < g.n; ++u) {
            if (cert->phi.map[model.rho[u]] != u) return false;
            if (cert->report.vertex_parity[model.rho[u]] != Parity::Odd) return false;
        }
    }
    return true;
}

TopologicalModel tree_topological_model(const OddoCertificate& cert) {
    if (!cert.plain) throw PreconditionError("tree_topological_model needs a plain certificate");
    if (!is_tree(cert.phi.source))
        throw PreconditionError("tree_topological_model: the source is not a tree");
    if (!is_tree(cert.phi.target))
        throw PreconditionError(
            "tree_topological_model: the target is not a tree, so the certificate cannot be a "
            "plain one from a tree");
    TopologicalModel model;
    model.host = cert.phi.source;
    model.pattern = cert.phi.target;
    model.rho = model_rho(cert);
    model.pattern_edges = model.pattern.edges();
    for (const auto& [u, w] : model.pattern_edges)
        model.paths.push_back(tree_path(model.host, model.rho[u], model.rho[w]));
    if (!verify_topological_model(model, &cert))
        throw Error("tree_topological_model: the model failed verification");
    return model;
}

}  // namespace homind
