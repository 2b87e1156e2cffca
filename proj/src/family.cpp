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

#include "homind/family.hpp"

#include <algorithm>
#include <set>

#include "homind/canonical.hpp"

namespace homind {

namespace {

constexpr int kEnumerationCap = 8;

struct Rep {
    Graph g;
    std::string cert;
};

void sort_level(std::vector<Rep>& level) {
    std::sort(level.begin(), level.end(), [](const Rep& a, const Rep& b) {
        int ma = a.g.edge_count(), mb = b.g.edge_count();
        if (ma != mb) return ma < mb;
        return a.cert < b.cert;
    });
}

}  // namespace

const char* family_kind_name(FamilySpec::Kind kind) {
    switch (kind) {
        case FamilySpec::Kind::AllGraphs: return "all-graphs";
        case FamilySpec::Kind::AllConnected: return "all-connected";
        case FamilySpec::Kind::Trees: return "trees";
        case FamilySpec::Kind::Planar: return "planar";
        case FamilySpec::Kind::UserCorpus: return "user-corpus";
        case FamilySpec::Kind::PredicateFiltered: return "predicate-filtered";
    }
    throw PreconditionError("family_kind_name: unknown kind");
}

FamilySpec::Kind parse_family_kind(const std::string& name) {
    if (name == "all-graphs") return FamilySpec::Kind::AllGraphs;
    if (name == "all-connected") return FamilySpec::Kind::AllConnected;
    if (name == "trees") return FamilySpec::Kind::Trees;
    if (name == "planar") return FamilySpec::Kind::Planar;
    if (name == "user-corpus") return FamilySpec::Kind::UserCorpus;
    if (name == "predicate-filtered") return FamilySpec::Kind::PredicateFiltered;
    throw ParseError("unknown family kind: " + name);
}

std::vector<Graph> enumerate_graphs(int max_n, int max_m, bool connected_only) {
    if (max_n < 0) throw PreconditionError("enumerate_graphs: negative order bound");
    if (max_n > kEnumerationCap) throw BudgetError("enumerate_graphs: order bound exceeds the enumeration cap");
    std::vector<Graph> out;
    if (max_n == 0) return out;
    std::vector<Rep> level = {{Graph(1), canonical_form(Graph(1)).certificate}};
    // Every graph on k vertices arises by deleting a vertex (a non-cut one in
    // the connected case), so extending each representative with every new
    // neighbourhood is complete. Edge bounds prune safely: induced subgraphs
    // never gain edges.
    for (int k = 1; k <= max_n; ++k) {
        sort_level(level);
        for (const Rep& r : level)
            if (max_m < 0 || r.g.edge_count() <= max_m) out.push_back(r.g);
        if (k == max_n) break;
        std::vector<Rep> next;
        std::set<std::string> seen;
        for (const Rep& r : level) {
            if (max_m >= 0 && r.g.edge_count() > max_m) continue;
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
                if (connected_only && mask == 0) continue;
                if (max_m >= 0 && r.g.edge_count() + __builtin_popcountll(mask) > max_m) continue;
                Graph h(k + 1);
                for (auto [u, v] : r.g.edges()) h.add_edge(u, v);
                for (int u = 0; u < k; ++u)
                    if ((mask >> u) & 1) h.add_edge(u, k);
                std::string cert = canonical_form(h).certificate;
                if (seen.insert(cert).second) next.push_back({h, std::move(cert)});
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<Graph> enumerate_family(const FamilySpec& spec, const PredicateResolver& resolver) {
    switch (spec.kind) {
        case FamilySpec::Kind::AllGraphs:
            return enumerate_graphs(spec.max_n, spec.max_m, false);
        case FamilySpec::Kind::AllConnected:
            return enumerate_graphs(spec.max_n, spec.max_m, true);
        case FamilySpec::Kind::Trees: {
            std::vector<Graph> out;
            for (const Graph& g : enumerate_graphs(spec.max_n, spec.max_m, true))
                if (is_tree(g)) out.push_back(g);
            return out;
        }
        case FamilySpec::Kind::Planar:
        case FamilySpec::Kind::PredicateFiltered: {
            if (!resolver) throw PreconditionError("enumerate_family: kind needs a predicate resolver");
            std::string name = spec.kind == FamilySpec::Kind::Planar ? "planar" : spec.predicate;
            PredicateFn pred = resolver(name);
            std::vector<Graph> out;
            for (const Graph& g : enumerate_graphs(spec.max_n, spec.max_m, false))
                if (pred(g)) out.push_back(g);
            return out;
        }
        case FamilySpec::Kind::UserCorpus: {
            std::vector<Rep> reps;
            std::set<std::string> seen;
            for (const Graph& g : spec.corpus) {
                if (spec.max_n > 0 && g.n > spec.max_n) continue;
                if (spec.max_m >= 0 && g.edge_count() > spec.max_m) continue;
                std::string cert = canonical_form(g).certificate;
                if (seen.insert(cert).second) reps.push_back({g, std::move(cert)});
            }
            std::sort(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) {
                if (a.g.n != b.g.n) return a.g.n < b.g.n;
                int ma = a.g.edge_count(), mb = b.g.edge_count();
                if (ma != mb) return ma < mb;
                return a.cert < b.cert;
            });
            std::vector<Graph> out;
            for (const Rep& r : reps) out.push_back(r.g);
            return out;
        }
    }
    throw PreconditionError("enumerate_family: unknown kind");
}

}  // namespace homind
