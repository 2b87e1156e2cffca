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

#include "homind/hom.hpp"

#include <algorithm>
#include <cmath>

#include "homind/canonical.hpp"
#include "homind/treewidth.hpp"

namespace homind {

namespace {

// Assignment order: BFS from a maximum-degree vertex of each component, so
// every later vertex (within a component) has an assigned neighbour to prune
// against.
std::vector<int> assignment_order(const Graph& f) {
    std::vector<int> order;
    std::vector<char> seen(std::size_t(std::max(f.n, 1)), 0);
    for (;;) {
        int start = -1;
        for (int v = 0; v < f.n; ++v)
            if (!seen[v] && (start == -1 || f.degree(v) > f.degree(start))) start = v;
        if (start == -1) break;
        std::vector<int> queue = {start};
        seen[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            order.push_back(v);
            std::uint64_t nb = f.adj[v];
            while (nb) {
                int w = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

template <class Num>
Num brute_count(const Graph& f, const Graph& g) {
    if (f.n == 0) return Num(1);
    if (g.n == 0) return Num(0);
    std::vector<int> order = assignment_order(f);
    std::vector<int> image(std::size_t(f.n), -1);
    Num total(0);
    std::function<void(std::size_t)> place = [&](std::size_t depth) {
        if (depth == order.size()) {
            total += Num(1);
            return;
        }
        int a = order[depth];
        for (int c = 0; c < g.n; ++c) {
            bool ok = true;
            std::uint64_t nb = f.adj[a];
            while (nb) {
                int b = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (image[b] >= 0 && !g.has_edge(c, image[b])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[a] = c;
            place(depth + 1);
            image[a] = -1;
        }
    };
    place(0);
    return total;
}

// ---- nice tree decomposition ----

struct NiceNode {
    enum class Type { Leaf, Introduce, Forget, Join };
    Type type;
    int vertex = -1;            // Introduce/Forget
    std::vector<int> bag;       // sorted
    int child = -1, child2 = -1;
};

struct NiceDecomposition {
    std::vector<NiceNode> nodes;  // children precede parents
    int root = -1;                // empty bag
};

std::vector<int> bag_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

// Appends forgets then introduces turning `from` into `to`; returns the last
// node index.
int morph_bag(NiceDecomposition& nd, int node, std::uint64_t from, std::uint64_t to) {
    for (int v : bag_vertices(from & ~to)) {
        from &= ~(std::uint64_t(1) << v);
        NiceNode step{NiceNode::Type::Forget, v, bag_vertices(from), node, -1};
        nd.nodes.push_back(std::move(step));
        node = int(nd.nodes.size()) - 1;
    }
    for (int v : bag_vertices(to & ~from)) {
        from |= std::uint64_t(1) << v;
        NiceNode step{NiceNode::Type::Introduce, v, bag_vertices(from), node, -1};
        nd.nodes.push_back(std::move(step));
        node = int(nd.nodes.size()) - 1;
    }
    return node;
}

int build_nice(NiceDecomposition& nd, const TreeDecomposition& d, int t, int parent) {
    int acc = -1;
    for (auto [a, b] : d.tree.edges()) {
        int child = a == t ? b : (b == t ? a : -1);
        if (child == -1 || child == parent) continue;
        int sub = build_nice(nd, d, child, t);
        int branch = morph_bag(nd, sub, d.bags[child], d.bags[t]);
        if (acc == -1) {
            acc = branch;
        } else {
            NiceNode join{NiceNode::Type::Join, -1, bag_vertices(d.bags[t]), acc, branch};
            nd.nodes.push_back(std::move(join));
            acc = int(nd.nodes.size()) - 1;
        }
    }
    if (acc == -1) {
        nd.nodes.push_back({NiceNode::Type::Leaf, -1, {}, -1, -1});
        acc = morph_bag(nd, int(nd.nodes.size()) - 1, 0, d.bags[t]);
    }
    return acc;
}

NiceDecomposition make_nice(const TreeDecomposition& d) {
    NiceDecomposition nd;
    int top = build_nice(nd, d, 0, -1);
    nd.root = morph_bag(nd, top, d.bags[0], 0);
    return nd;
}

template <class Num>
Num dp_count(const Graph& f, const Graph& g, const TreeDecomposition& dec) {
    NiceDecomposition nd = make_nice(dec);
    std::vector<std::vector<Num>> tables(nd.nodes.size());
    auto radix = [&](const std::vector<int>& bag) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < bag.size(); ++i) size *= std::size_t(g.n);
        return size;
    };
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const NiceNode& node = nd.nodes[i];
        switch (node.type) {
            case NiceNode::Type::Leaf:
                tables[i] = {Num(1)};
                break;
            case NiceNode::Type::Introduce: {
                const auto& child = tables[node.child];
                std::size_t p = 0;
                while (node.bag[p] != node.vertex) ++p;
                std::size_t lo = 1;
                for (std::size_t j = 0; j < p; ++j) lo *= std::size_t(g.n);
                std::vector<Num> table(radix(node.bag), Num(0));
                for (std::size_t idx = 0; idx < child.size(); ++idx) {
                    std::size_t low = idx % lo, high = idx / lo;
                    // Images of bag mates, for the edge checks.
                    std::vector<int> img(node.bag.size(), -1);
                    std::size_t rest = idx;
                    for (std::size_t j = 0; j < node.bag.size(); ++j) {
                        if (j == p) continue;
                        img[j] = int(rest % std::size_t(g.n));
                        rest /= std::size_t(g.n);
                    }
                    for (int c = 0; c < g.n; ++c) {
                        bool ok = true;
                        for (std::size_t j = 0; j < node.bag.size() && ok; ++j) {
                            if (j == p) continue;
                            if (f.has_edge(node.vertex, node.bag[j]) && !g.has_edge(c, img[j]))
                                ok = false;
                        }
                        if (ok)
                            table[low + std::size_t(c) * lo + high * lo * std::size_t(g.n)] =
                                child[idx];
                    }
                }
                tables[i] = std::move(table);
                break;
            }
            case NiceNode::Type::Forget: {
                const auto& child = tables[node.child];
                std::size_t p = 0;
                while (p < node.bag.size() && node.bag[p] < node.vertex) ++p;
                std::size_t lo = 1;
                for (std::size_t j = 0; j < p; ++j) lo *= std::size_t(g.n);
                std::vector<Num> table(radix(node.bag), Num(0));
                for (std::size_t idx = 0; idx < child.size(); ++idx) {
                    std::size_t low = idx % lo, high = idx / (lo * std::size_t(g.n));
                    table[low + high * lo] += child[idx];
                }
                tables[i] = std::move(table);
                break;
            }
            case NiceNode::Type::Join: {
                const auto& left = tables[node.child];
                const auto& right = tables[node.child2];
                std::vector<Num> table(left.size(), Num(0));
                for (std::size_t idx = 0; idx < left.size(); ++idx)
                    table[idx] = left[idx] * right[idx];
                tables[i] = std::move(table);
                break;
            }
        }
        if (node.child >= 0) tables[node.child].clear();
        if (node.child2 >= 0) tables[node.child2].clear();
    }
    return tables[nd.root][0];
}

// 128-bit accumulator whose additions and multiplications refuse to wrap.
struct CheckedU128 {
    u128 v = 0;
    CheckedU128() = default;
    explicit CheckedU128(int x) : v(u128(x)) {}
    CheckedU128& operator+=(const CheckedU128& o) {
        v = checked_add(v, o.v);
        return *this;
    }
    CheckedU128 operator*(const CheckedU128& o) const {
        CheckedU128 r;
        r.v = checked_mul(v, o.v);
        return r;
    }
};

constexpr double kBruteBudget = double(1 << 20);
constexpr double kTableBudget = double(1 << 22);

template <class Num>
Num count_dispatch(const Graph& f, const Graph& g) {
    if (f.n == 0) return Num(1);
    if (g.n == 0) return Num(0);
    double pow = std::pow(double(g.n), double(f.n));
    if (pow <= kBruteBudget || f.n > 15) return brute_count<Num>(f, g);
    auto [w, dec] = exact_treewidth(f);
    if (std::pow(double(g.n), double(w + 1)) <= kTableBudget) return dp_count<Num>(f, g, dec);
    return brute_count<Num>(f, g);
}

}  // namespace

bool is_homomorphism(const Graph& f, const Graph& g, const std::vector<int>& map) {
    if (int(map.size()) != f.n) return false;
    for (int v : map)
        if (v < 0 || v >= g.n) return false;
    for (auto [u, v] : f.edges())
        if (!g.has_edge(map[u], map[v])) return false;
    return true;
}

u128 count_homs(const Graph& f, const Graph& g) { return count_dispatch<CheckedU128>(f, g).v; }

BigInt count_homs_big(const Graph& f, const Graph& g) { return count_dispatch<BigInt>(f, g); }

u128 count_homs_backtracking(const Graph& f, const Graph& g) {
    if (f.n == 0) return 1;
    if (g.n == 0) return 0;
    return brute_count<CheckedU128>(f, g).v;
}

u128 count_homs_decomposition(const Graph& f, const Graph& g) {
    if (f.n == 0) return 1;
    if (g.n == 0) return 0;
    auto [w, dec] = exact_treewidth(f);
    (void)w;
    return dp_count<CheckedU128>(f, g, dec).v;
}

void for_each_hom(const Graph& f, const Graph& g,
                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (f.n == 0) {
        visit({});
        return;
    }
    if (g.n == 0) return;
    std::vector<int> image(std::size_t(f.n), -1);
    bool stop = false;
    std::function<void(int)> place = [&](int a) {
        if (stop) return;
        if (a == f.n) {
            if (!visit(image)) stop = true;
            return;
        }
        for (int c = 0; c < g.n && !stop; ++c) {
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
            place(a + 1);
        }
        image[a] = -1;
    };
    place(0);
}

std::vector<Homomorphism> enumerate_homs(const Graph& f, const Graph& g, double budget) {
    if (std::pow(double(g.n), double(f.n)) > budget)
        throw BudgetError("enumerate_homs: search space exceeds the budget");
    std::vector<Homomorphism> out;
    for_each_hom(f, g, [&](const std::vector<int>& map) {
        out.push_back({f, g, map});
        return true;
    });
    return out;
}

std::optional<Graph> find_distinguisher(const Graph& g, const Graph& h, const FamilySpec& family,
                                        const PredicateResolver& resolver) {
    for (const Graph& f : enumerate_family(family, resolver))
        if (count_homs_big(f, g) != count_homs_big(f, h)) return f;
    return std::nullopt;
}

}  // namespace homind
