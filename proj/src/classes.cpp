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

#include "homind/classes.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homind/canonical.hpp"
#include "homind/treewidth.hpp"
#include "homind/util.hpp"

namespace homind {

namespace {

constexpr long long kContainmentBudget = 20'000'000;

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Branch-set backtracking. Pattern vertices are placed most-constrained
// first; each branch set is a connected host set enumerated once via its
// minimum element.
struct MinorSearch {
    const Graph& g;
    const Graph& m;
    std::vector<int> order;
    std::vector<std::uint64_t> branch;  // by placement index
    std::uint64_t used = 0;
    long long nodes = 0;

    MinorSearch(const Graph& host, const Graph& pattern) : g(host), m(pattern) {
        order.resize(m.n);
        for (int v = 0; v < m.n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return m.degree(a) > m.degree(b); });
        branch.assign(m.n, 0);
    }

    bool linked(int idx, std::uint64_t set_nbr) const {
        for (int j = 0; j < idx; ++j) {
            if (!m.has_edge(order[idx], order[j])) continue;
            if (!(set_nbr & branch[j])) return false;
        }
        return true;
    }

    bool place(int idx) {
        if (idx == m.n) return true;
        std::uint64_t avail = g.vertex_mask() & ~used;
        int slack = __builtin_popcountll(avail) - (m.n - idx - 1);
        if (slack <= 0) return false;
        for (std::uint64_t roots = avail; roots; roots &= roots - 1) {
            int r = __builtin_ctzll(roots);
            std::uint64_t above = r + 1 >= 64 ? 0 : avail & ~(bit(r + 1) - 1);
            if (grow(idx, bit(r), g.adj[r], 0, above, slack)) return true;
        }
        return false;
    }

    // set: the branch set under construction; set_nbr: union of its host
    // adjacencies; banned: declined candidates; allowed: vertices above the
    // root still free; max_size: growth bound leaving one vertex per
    // remaining pattern vertex.
    bool grow(int idx, std::uint64_t set, std::uint64_t set_nbr, std::uint64_t banned,
              std::uint64_t allowed, int max_size) {
        if (++nodes > kContainmentBudget) throw BudgetError("has_minor: search budget exceeded");
        if (linked(idx, set_nbr)) {
            branch[idx] = set;
            used |= set;
            if (place(idx + 1)) return true;
            used &= ~set;
        }
        if (__builtin_popcountll(set) >= max_size) return false;
        std::uint64_t cand = set_nbr & allowed & ~set & ~banned;
        std::uint64_t declined = 0;
        while (cand) {
            int c = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (grow(idx, set | bit(c), set_nbr | g.adj[c], banned | declined, allowed, max_size))
                return true;
            declined |= bit(c);
        }
        return false;
    }
};

// Subdivision search: inject branch vertices, then route one internally
// disjoint path per pattern edge, shortest continuations first.
struct TopoSearch {
    const Graph& g;
    const Graph& m;
    std::vector<int> order;
    std::vector<std::pair<int, int>> medges;
    std::vector<int> rho;
    std::uint64_t branch_mask = 0;
    std::uint64_t internal_mask = 0;
    long long nodes = 0;

    TopoSearch(const Graph& host, const Graph& pattern)
        : g(host), m(pattern), medges(pattern.edges()), rho(pattern.n, -1) {
        order.resize(m.n);
        for (int v = 0; v < m.n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return m.degree(a) > m.degree(b); });
    }

    bool assign(std::size_t idx) {
        if (idx == order.size()) return route(0);
        int v = order[idx];
        for (int h = 0; h < g.n; ++h) {
            if (branch_mask & bit(h)) continue;
            if (g.degree(h) < m.degree(v)) continue;
            rho[v] = h;
            branch_mask |= bit(h);
            if (assign(idx + 1)) return true;
            branch_mask &= ~bit(h);
        }
        return false;
    }

    bool route(std::size_t e) {
        if (e == medges.size()) return true;
        return dfs(e, rho[medges[e].first], rho[medges[e].second], 0);
    }

    bool dfs(std::size_t e, int cur, int target, std::uint64_t path) {
        if (++nodes > kContainmentBudget)
            throw BudgetError("has_topological_minor: search budget exceeded");
        if (g.adj[cur] & bit(target)) {
            internal_mask |= path;
            if (route(e + 1)) return true;
            internal_mask &= ~path;
        }
        std::uint64_t cand = g.adj[cur] & ~(branch_mask | internal_mask | path);
        while (cand) {
            int w = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (dfs(e, w, target, path | bit(w))) return true;
        }
        return false;
    }
};

bool is_planar(const Graph& g) {
    return !has_minor(g, complete_graph(5)) && !has_minor(g, complete_bipartite(3, 3));
}

// Excludes every k-component Kuratowski graph (each component K_5 or K_{3,3})
// as a minor.
bool in_p_k(const Graph& g, int k) {
    for (int fives = k; fives >= 0; --fives) {
        Graph pattern(0);
        for (int i = 0; i < fives; ++i) pattern = disjoint_union(pattern, complete_graph(5));
        for (int i = fives; i < k; ++i) pattern = disjoint_union(pattern, complete_bipartite(3, 3));
        if (pattern.n > g.n) continue;
        if (has_minor(g, pattern)) return false;
    }
    return true;
}

// Rooted decomposition search: some root set whose torso has maximum degree
// at most 3, such that every component hanging off it fits bags of size at
// most 3 with its attachment set kept together (a clique on the attachment
// keeps it inside one bag).
bool in_d3star(const Graph& g) {
    if (g.n == 0) return true;
    if (g.n > 12) throw BudgetError("d3star membership is capped at 12 vertices");
    if (g.max_degree() <= 3) return true;
    std::uint64_t all = g.vertex_mask();
    for (std::uint64_t root = 0; root <= all; ++root) {
        if (torso(g, root).max_degree() > 3) continue;
        bool ok = true;
        for (std::uint64_t comp : components(g, all & ~root)) {
            std::uint64_t attach = 0;
            for (std::uint64_t rest = comp; rest; rest &= rest - 1)
                attach |= g.adj[__builtin_ctzll(rest)];
            attach &= ~comp;
            if (__builtin_popcountll(attach) > 3) {
                ok = false;
                break;
            }
            std::vector<int> origin;
            Graph piece = induced_subgraph(g, comp | attach, &origin);
            for (int i = 0; i < piece.n; ++i) {
                if (!((attach >> origin[i]) & 1)) continue;
                for (int j = i + 1; j < piece.n; ++j)
                    if ((attach >> origin[j]) & 1) piece.add_edge(i, j);
            }
            if (exact_treewidth(piece).first > 2) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool predicate_needs_param(const std::string& name) {
    return name == "p_k" || name == "maxdeg" || name == "tw_le" || name == "k2h_free";
}

bool predicate_known(const std::string& name) {
    return predicate_needs_param(name) || name == "planar" || name == "d3star" ||
           name == "edgeless" || name == "forests" || name == "empty";
}

int ed_rec(const Graph& g, const ClassPredicate& p, std::unordered_map<std::string, int>& memo) {
    if (class_member(g, p)) return 0;
    if (g.n == 0) throw PreconditionError("elimination_distance: predicate rejects the empty graph");
    std::string key = canonical_form(g).certificate;
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    int result;
    std::vector<std::uint64_t> comps = components(g);
    if (comps.size() > 1) {
        result = 0;
        for (std::uint64_t c : comps)
            result = std::max(result, ed_rec(induced_subgraph(g, c), p, memo));
    } else {
        result = INT_MAX;
        for (int v = 0; v < g.n; ++v) result = std::min(result, ed_rec(delete_vertex(g, v), p, memo));
        result += 1;
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

bool has_minor(const Graph& g, const Graph& m) {
    if (m.n > g.n || m.edge_count() > g.edge_count()) return false;
    if (m.n == 0) return true;
    MinorSearch search(g, m);
    return search.place(0);
}

bool has_topological_minor(const Graph& g, const Graph& m) {
    if (m.n > g.n || m.edge_count() > g.edge_count()) return false;
    if (m.n == 0) return true;
    TopoSearch search(g, m);
    return search.assign(0);
}

ClassPredicate parse_class_predicate(const std::string& token) {
    ClassPredicate p;
    std::size_t colon = token.find(':');
    p.name = token.substr(0, colon);
    if (!predicate_known(p.name)) throw ParseError("unknown class predicate: " + token);
    if (colon == std::string::npos) {
        if (predicate_needs_param(p.name))
            throw ParseError("class predicate " + p.name + " needs a parameter");
        return p;
    }
    if (!predicate_needs_param(p.name))
        throw ParseError("class predicate " + p.name + " takes no parameter");
    std::string arg = token.substr(colon + 1);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("class predicate parameter must be a non-negative integer: " + token);
    p.param = std::stoi(arg);
    if ((p.name == "p_k" || p.name == "k2h_free") && p.param < 1)
        throw ParseError("class predicate " + p.name + " needs a parameter of at least 1");
    return p;
}

std::string predicate_token(const ClassPredicate& p) {
    if (!predicate_needs_param(p.name)) return p.name;
    return p.name + ":" + std::to_string(p.param);
}

bool class_member(const Graph& g, const ClassPredicate& p) {
    if (p.name == "planar") return is_planar(g);
    if (p.name == "p_k") return in_p_k(g, p.param);
    if (p.name == "maxdeg") return g.max_degree() <= p.param;
    if (p.name == "d3star") return in_d3star(g);
    if (p.name == "tw_le") return exact_treewidth(g).first <= p.param;
    if (p.name == "edgeless") return g.edge_count() == 0;
    if (p.name == "forests") return is_forest(g);
    if (p.name == "empty") return g.n == 0;
    if (p.name == "k2h_free")
        return !has_minor(g, complete_graph(4)) && !has_minor(g, complete_bipartite(2, p.param));
    throw PreconditionError("unknown class predicate: " + p.name);
}

PredicateFn class_predicate(const std::string& token) {
    ClassPredicate p = parse_class_predicate(token);
    return [p](const Graph& g) { return class_member(g, p); };
}

int deletion_distance(const Graph& g, const ClassPredicate& p) {
    if (g.n > 16) throw BudgetError("deletion_distance is capped at 16 vertices");
    std::uint64_t all = g.vertex_mask();
    for (int k = 0; k <= g.n; ++k) {
        for (std::uint64_t x = 0; x <= all; ++x) {
            if (__builtin_popcountll(x) != k) continue;
            if (class_member(induced_subgraph(g, all & ~x), p)) return k;
        }
    }
    throw PreconditionError("deletion_distance: predicate rejects the empty graph");
}

int elimination_distance(const Graph& g, const ClassPredicate& p) {
    std::unordered_map<std::string, int> memo;
    return ed_rec(g, p, memo);
}

Graph build_witness(WitnessKind kind, int k) {
    if (k < 0) throw PreconditionError("build_witness: parameter must be non-negative");
    if (kind == WitnessKind::Genus) {
        int copies = k + 1;
        if (5 * copies + 1 > kMaxVertices) throw BudgetError("genus witness exceeds the order cap");
        Graph g(5 * copies + 1);
        for (int c = 0; c < copies; ++c)
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) g.add_edge(5 * c + i, 5 * c + j);
        int fresh = 5 * copies;
        for (int c = 0; c < copies; ++c) g.add_edge(fresh, 5 * c);
        return g;
    }
    int copies = 2 * k + 1;
    int universal = k + 1;
    int n = 5 * copies + universal;
    if (n > kMaxVertices) throw BudgetError("hadwiger witness exceeds the order cap");
    Graph g(n);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) g.add_edge(5 * c + i, 5 * c + j);
    for (int u = 5 * copies; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (v != u) g.add_edge(u, v);
    if (!is_k_connected(g, k + 1))
        throw Error("build_witness: hadwiger construction failed its connectivity check");
    return g;
}

}  // namespace homind
