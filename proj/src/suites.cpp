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

#include "homind/suites.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homind/canonical.hpp"
#include "homind/cfi.hpp"
#include "homind/classes.hpp"
#include "homind/contractor.hpp"
#include "homind/family.hpp"
#include "homind/graph.hpp"
#include "homind/graph6.hpp"
#include "homind/hom.hpp"
#include "homind/oddo.hpp"
#include "homind/reductions.hpp"
#include "homind/treewidth.hpp"

namespace homind {
namespace {

using nlohmann::json;

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

struct Checker {
    std::vector<SuiteCheck> checks;
    bool all = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
        all = all && pass;
    }
};

// Failure tally whose sample is the lexicographically least message, so
// parallel sweeps report the same witness on every run.
struct FailBox {
    long long count = 0;
    std::string sample;

    void note(const std::string& msg) {
        ++count;
        if (sample.empty() || msg < sample) sample = msg;
    }
    void merge(const FailBox& other) {
        count += other.count;
        if (!other.sample.empty() && (sample.empty() || other.sample < sample)) sample = other.sample;
    }
    bool clean() const { return count == 0; }
};

std::string describe_pair(const Graph& f, const Graph& g) {
    return encode_graph6(f) + " -> " + encode_graph6(g);
}

std::string pair_key(const Graph& f, const Graph& g) {
    std::string a = canonical_form(f).certificate;
    std::string b = canonical_form(g).certificate;
    return std::to_string(a.size()) + ":" + a + b;
}

bool graphs_equal(const Graph& g, const Graph& h) { return g.n == h.n && g.adj == h.adj; }

Homomorphism make_hom(const Graph& f, const Graph& g, const int* map) {
    return Homomorphism{f, g, std::vector<int>(map, map + f.n)};
}

// Visits every homomorphism f -> g in lexicographic map order with no heap
// traffic per candidate. Callers handle the empty graphs themselves.
template <typename Fn>
void sweep_homs(const Graph& f, const Graph& g, Fn&& fn) {
    if (f.n == 0 || g.n == 0) return;
    int map[kMaxVertices];
    int a = 0;
    map[0] = -1;
    while (a >= 0) {
        ++map[a];
        if (map[a] >= g.n) {
            --a;
            continue;
        }
        bool ok = true;
        std::uint64_t earlier = f.adj[a] & (bit(a) - 1);
        while (earlier) {
            int b = std::countr_zero(earlier);
            earlier &= earlier - 1;
            if (!g.has_edge(map[b], map[a])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (a + 1 == f.n) {
            fn(static_cast<const int*>(map));
            continue;
        }
        map[++a] = -1;
    }
}

// Allocation-free parity classification mirroring classify_parity: parity[a]
// is 0 even, 1 odd, 2 mixed; vertices whose image has no neighbours count
// odd. Returns whether the map is a plain oddomorphism. parity and fibre
// must hold f.n and g.n entries.
bool classify_fast(const Graph& f, const Graph& g, const int* map, unsigned char* parity,
                   std::uint64_t* fibre) {
    for (int w = 0; w < g.n; ++w) fibre[w] = 0;
    for (int a = 0; a < f.n; ++a) fibre[map[a]] |= bit(a);
    bool plain = true;
    for (int a = 0; a < f.n; ++a) {
        bool saw_odd = false;
        bool saw_even = false;
        std::uint64_t images = g.adj[map[a]];
        while (images) {
            int w = std::countr_zero(images);
            images &= images - 1;
            if (std::popcount(f.adj[a] & fibre[w]) & 1) {
                saw_odd = true;
            } else {
                saw_even = true;
            }
        }
        if (saw_odd && saw_even) {
            parity[a] = 2;
            plain = false;
        } else {
            parity[a] = saw_even ? 0 : 1;
        }
    }
    if (!plain) return false;
    for (int w = 0; w < g.n; ++w) {
        int odd = 0;
        std::uint64_t rest = fibre[w];
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            odd ^= parity[a] == 1;
        }
        if (!odd) return false;
    }
    return true;
}

// Induced subgraph on comp plus smask with the smask positions completed to
// a clique.
Graph glued_piece(const Graph& g, std::uint64_t comp, std::uint64_t smask) {
    std::vector<int> origin;
    Graph piece = induced_subgraph(g, comp | smask, &origin);
    for (int i = 0; i < piece.n; ++i) {
        if (!(smask >> origin[i] & 1)) continue;
        for (int j = i + 1; j < piece.n; ++j)
            if (smask >> origin[j] & 1) piece.add_edge(i, j);
    }
    return piece;
}

// ---------------------------------------------------------------------------
// Suite "v8-k5": no minor of the Wagner graph maps to K5 by a plain
// oddomorphism, and in every candidate homomorphism each odd-classified
// vertex has degree at least 4.

std::vector<Graph> minors_up_to_iso(const Graph& start) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<Graph> stack{start};
    seen.insert(canonical_form(start).certificate);
    while (!stack.empty()) {
        Graph m = stack.back();
        stack.pop_back();
        out.push_back(m);
        auto push = [&](const Graph& child) {
            if (child.n == 0) return;
            if (seen.insert(canonical_form(child).certificate).second) stack.push_back(child);
        };
        for (int v = 0; v < m.n; ++v) push(delete_vertex(m, v));
        for (auto [u, v] : m.edges()) {
            Graph del = m;
            del.remove_edge(u, v);
            push(del);
            push(contract_edge(m, u, v));
        }
    }
    return out;
}

SuiteResult suite_v8(const SuiteBounds& b) {
    Graph k5 = complete_graph(5);
    std::vector<Graph> minors = minors_up_to_iso(wagner_v8());
    std::vector<long long> homs(minors.size(), 0);
    std::vector<FailBox> plain_hits(minors.size());
    std::vector<FailBox> degree_hits(minors.size());
    parallel_for(minors.size(), b.threads, [&](std::size_t i) {
        const Graph& m = minors[i];
        unsigned char parity[kMaxVertices];
        std::uint64_t fibre[kMaxVertices];
        long long seen = 0;
        sweep_homs(m, k5, [&](const int* map) {
            ++seen;
            if (classify_fast(m, k5, map, parity, fibre))
                plain_hits[i].note("plain oddomorphism from minor " + encode_graph6(m));
            for (int a = 0; a < m.n; ++a)
                if (parity[a] == 1 && std::popcount(m.adj[a]) < 4)
                    degree_hits[i].note("odd vertex of degree " +
                                        std::to_string(std::popcount(m.adj[a])) + " in minor " +
                                        encode_graph6(m));
        });
        homs[i] = seen;
    });
    long long total_homs = 0;
    FailBox plains;
    FailBox degrees;
    bool has_k1 = false;
    for (std::size_t i = 0; i < minors.size(); ++i) {
        total_homs += homs[i];
        plains.merge(plain_hits[i]);
        degrees.merge(degree_hits[i]);
        has_k1 = has_k1 || minors[i].n == 1;
    }
    Checker ck;
    ck.add("minor enumeration reaches the single vertex", has_k1,
           std::to_string(minors.size()) + " minors");
    ck.add("no minor admits a plain oddomorphism to K5", plains.clean(), plains.sample);
    ck.add("every odd-classified vertex has degree at least 4", degrees.clean(), degrees.sample);
    SuiteResult r{"v8-k5", ck.all, std::move(ck.checks), json::object()};
    r.payload["minors"] = minors.size();
    r.payload["homomorphisms"] = total_homs;
    r.payload["bounds"] = {{"host", "V8"}, {"target", "K5"}, {"enumeration", "all minors up to isomorphism"}};
    return r;
}

// ---------------------------------------------------------------------------
// Suite "cfi-oracle": distinguishing the CFI pair of a base coincides with
// the existence of a weak oddomorphism to the base, for every connected
// pattern up to the size cap.

SuiteResult suite_cfi(const SuiteBounds& b) {
    int cap = b.max_n > 0 ? b.max_n : 6;
    double budget = b.budget > 0 ? double(b.budget) : 1e8;
    std::vector<Graph> patterns = enumerate_graphs(cap, -1, true);
    struct BaseCase {
        std::string name;
        Graph base;
    };
    std::vector<BaseCase> bases;
    bases.push_back({"C3", cycle_graph(3)});
    bases.push_back({"K4", complete_graph(4)});
    Checker ck;
    json per_base = json::array();
    for (const BaseCase& bc : bases) {
        CFIPair pair = build_cfi_pair(bc.base);
        std::vector<unsigned char> lhs(patterns.size(), 0);
        std::vector<unsigned char> rhs(patterns.size(), 0);
        parallel_for(patterns.size(), b.threads, [&](std::size_t i) {
            lhs[i] = cfi_distinguishes(patterns[i], pair) ? 1 : 0;
            rhs[i] = search_oddomorphism(patterns[i], bc.base, true, budget) ? 1 : 0;
        });
        FailBox fails;
        long long distinguishing = 0;
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            distinguishing += lhs[i];
            if (lhs[i] != rhs[i])
                fails.note("pattern " + encode_graph6(patterns[i]) + " against base " + bc.name);
        }
        ck.add("distinguishing coincides with weak-oddomorphism existence (" + bc.name + ")",
               fails.clean(), fails.sample);
        per_base.push_back({{"base", bc.name},
                            {"patterns", patterns.size()},
                            {"distinguishing", distinguishing}});
    }
    SuiteResult r{"cfi-oracle", ck.all, std::move(ck.checks), json::object()};
    r.payload["bases"] = per_base;
    r.payload["bounds"] = {{"pattern_max_n", cap}, {"connected_only", true}, {"budget", budget}};
    return r;
}

// ---------------------------------------------------------------------------
// Plain-certificate sweeps shared by the reduction suites and the
// monotonicity suites. Both sweeps enumerate source and target graphs up to
// isomorphism, every homomorphism between them, and keep the plain ones.

struct SeparatorOut {
    long long plain_certs = 0;
    long long instances = 0;
    long long degenerate = 0;
    long long parity_rows = 0;
    FailBox classifier;
    FailBox degenerate_fail;
    FailBox error_fail;
    FailBox row_fail;
    FailBox verify_fail;
    FailBox minor_fail;
    FailBox shrink_fail;
    std::map<std::string, std::pair<Graph, Graph>> pairs;

    void merge(const SeparatorOut& o) {
        plain_certs += o.plain_certs;
        instances += o.instances;
        degenerate += o.degenerate;
        parity_rows += o.parity_rows;
        classifier.merge(o.classifier);
        degenerate_fail.merge(o.degenerate_fail);
        error_fail.merge(o.error_fail);
        row_fail.merge(o.row_fail);
        verify_fail.merge(o.verify_fail);
        minor_fail.merge(o.minor_fail);
        shrink_fail.merge(o.shrink_fail);
        for (const auto& kv : o.pairs) pairs.emplace(kv.first, kv.second);
    }
};

SeparatorOut separator_sweep(int max_f, int max_g, int max_s, int threads, bool collect) {
    std::vector<Graph> sources = enumerate_graphs(max_f);
    std::vector<Graph> targets = enumerate_graphs(max_g);
    std::vector<SeparatorOut> outs(sources.size());
    parallel_for(sources.size(), threads, [&](std::size_t si) {
        const Graph& f = sources[si];
        SeparatorOut& out = outs[si];
        unsigned char parity[kMaxVertices];
        std::uint64_t fibre[kMaxVertices];
        for (const Graph& g : targets) {
            sweep_homs(f, g, [&](const int* map) {
                if (!classify_fast(f, g, map, parity, fibre)) return;
                auto cert = verify_oddomorphism(make_hom(f, g, map));
                if (!cert || !cert->plain) {
                    out.classifier.note("classifier disagrees on " + describe_pair(f, g));
                    return;
                }
                ++out.plain_certs;
                if (collect) out.pairs.emplace(pair_key(f, g), std::make_pair(f, g));
                for (std::uint64_t smask = 0; smask < bit(f.n); ++smask) {
                    if (std::popcount(smask) > max_s) continue;
                    int n = int(components(f, f.vertex_mask() & ~smask).size());
                    std::uint64_t image = 0;
                    std::uint64_t rest = smask;
                    while (rest) {
                        int s = std::countr_zero(rest);
                        rest &= rest - 1;
                        image |= bit(map[s]);
                    }
                    int m = int(components(g, g.vertex_mask() & ~image).size());
                    if (n <= m) continue;
                    std::string where =
                        describe_pair(f, g) + " separator mask " + std::to_string(smask);
                    if (m == 0) {
                        ++out.degenerate;
                        try {
                            separator_reduce(*cert, smask);
                            out.degenerate_fail.note("degenerate separator accepted on " + where);
                        } catch (const PreconditionError&) {
                        } catch (const std::exception& e) {
                            out.degenerate_fail.note("degenerate separator raised " +
                                                     std::string(e.what()) + " on " + where);
                        }
                        continue;
                    }
                    SeparatorReduction red;
                    try {
                        red = separator_reduce(*cert, smask);
                    } catch (const std::exception& e) {
                        out.error_fail.note(std::string(e.what()) + " on " + where);
                        continue;
                    }
                    ++out.instances;
                    const F2Matrix& p = red.instance.parity;
                    for (int row = 0; row < p.rows; ++row) {
                        ++out.parity_rows;
                        int sum = 0;
                        for (int col = 0; col < p.cols; ++col) sum ^= p.get(row, col);
                        if (sum != 1) out.row_fail.note("parity row sums to zero on " + where);
                    }
                    auto re = verify_oddomorphism(red.reduced.phi);
                    if (!re || !re->plain)
                        out.verify_fail.note("reduced certificate fails on " + where);
                    std::uint64_t cmask = 0;
                    for (int v : chosen_vertices(red.instance)) cmask |= bit(v);
                    Graph host = glued_piece(f, cmask, smask);
                    if (!has_minor(host, red.reduced.phi.source))
                        out.minor_fail.note("reduced graph is not a minor of its piece on " + where);
                    if (red.reduced.phi.source.n >= f.n)
                        out.shrink_fail.note("reduction does not shrink on " + where);
                    if (collect)
                        out.pairs.emplace(pair_key(red.reduced.phi.source, g),
                                          std::make_pair(red.reduced.phi.source, g));
                }
            });
        }
    });
    SeparatorOut total;
    for (const SeparatorOut& o : outs) total.merge(o);
    return total;
}

SuiteResult suite_separator(const SuiteBounds& b) {
    int max_f = b.max_n > 0 ? b.max_n : 7;
    SeparatorOut out = separator_sweep(max_f, 4, 2, b.threads, false);
    Checker ck;
    ck.add("the sweep found instances", out.instances > 0,
           std::to_string(out.instances) + " instances");
    ck.add("the fast classifier agrees with verification", out.classifier.clean(),
           out.classifier.sample);
    ck.add("separators covering the whole target are rejected", out.degenerate_fail.clean(),
           out.degenerate_fail.sample);
    ck.add("the construction succeeds on every instance", out.error_fail.clean(),
           out.error_fail.sample);
    ck.add("every parity row sums to one", out.row_fail.clean(), out.row_fail.sample);
    ck.add("every reduced certificate re-verifies plain", out.verify_fail.clean(),
           out.verify_fail.sample);
    ck.add("every reduced graph is a minor of its glued piece", out.minor_fail.clean(),
           out.minor_fail.sample);
    ck.add("every reduction strictly shrinks the source", out.shrink_fail.clean(),
           out.shrink_fail.sample);
    SuiteResult r{"separator-sweep", ck.all, std::move(ck.checks), json::object()};
    r.payload["plain_certificates"] = out.plain_certs;
    r.payload["instances"] = out.instances;
    r.payload["degenerate_rejections"] = out.degenerate;
    r.payload["parity_rows"] = out.parity_rows;
    r.payload["bounds"] = {{"source_max_n", max_f}, {"target_max_n", 4}, {"separator_max", 2}};
    return r;
}

struct CutOut {
    long long plain_certs = 0;
    long long instances = 0;
    long long rejected = 0;
    long long partners = 0;
    FailBox classifier;
    FailBox reject_fail;
    FailBox error_fail;
    FailBox map_fail;
    FailBox verify_fail;
    FailBox parity_fail;
    FailBox partner_fail;
    std::map<std::string, std::pair<Graph, Graph>> pairs;

    void merge(const CutOut& o) {
        plain_certs += o.plain_certs;
        instances += o.instances;
        rejected += o.rejected;
        partners += o.partners;
        classifier.merge(o.classifier);
        reject_fail.merge(o.reject_fail);
        error_fail.merge(o.error_fail);
        map_fail.merge(o.map_fail);
        verify_fail.merge(o.verify_fail);
        parity_fail.merge(o.parity_fail);
        partner_fail.merge(o.partner_fail);
        for (const auto& kv : o.pairs) pairs.emplace(kv.first, kv.second);
    }
};

CutOut cut_sweep(int max_f, int max_g, int threads, bool collect) {
    std::vector<Graph> sources = enumerate_graphs(max_f);
    std::vector<Graph> targets = enumerate_graphs(max_g);
    std::vector<CutOut> outs(sources.size());
    parallel_for(sources.size(), threads, [&](std::size_t si) {
        const Graph& f = sources[si];
        CutOut& out = outs[si];
        unsigned char parity[kMaxVertices];
        std::uint64_t fibre[kMaxVertices];
        for (const Graph& g : targets) {
            sweep_homs(f, g, [&](const int* map) {
                if (!classify_fast(f, g, map, parity, fibre)) return;
                auto cert = verify_oddomorphism(make_hom(f, g, map));
                if (!cert || !cert->plain) {
                    out.classifier.note("classifier disagrees on " + describe_pair(f, g));
                    return;
                }
                ++out.plain_certs;
                if (collect) out.pairs.emplace(pair_key(f, g), std::make_pair(f, g));
                for (int s = 0; s < f.n; ++s) {
                    if (components(f, f.vertex_mask() & ~bit(s)).size() < 2) continue;
                    std::string where = describe_pair(f, g) + " cut vertex " + std::to_string(s);
                    int t = int(components(g, g.vertex_mask() & ~bit(map[s])).size());
                    if (t != 1) {
                        ++out.rejected;
                        try {
                            cut_vertex_reduce(*cert, s);
                            out.reject_fail.note("disconnecting image accepted on " + where);
                        } catch (const PreconditionError&) {
                        } catch (const std::exception& e) {
                            out.reject_fail.note("disconnecting image raised " +
                                                 std::string(e.what()) + " on " + where);
                        }
                        continue;
                    }
                    CutVertexReduction red;
                    try {
                        red = cut_vertex_reduce(*cert, s);
                    } catch (const std::exception& e) {
                        out.error_fail.note(std::string(e.what()) + " on " + where);
                        continue;
                    }
                    ++out.instances;
                    const Graph& piece = red.cert.phi.source;
                    Graph expect = induced_subgraph(f, red.component_mask | bit(s));
                    if (!graphs_equal(piece, expect) || !graphs_equal(red.cert.phi.target, g))
                        out.map_fail.note("piece graphs disagree on " + where);
                    int spos = -1;
                    for (int i = 0; i < piece.n; ++i) {
                        if (red.origin[i] == s) spos = i;
                        if (red.cert.phi.map[i] != cert->phi.map[red.origin[i]])
                            out.map_fail.note("piece map disagrees on " + where);
                    }
                    if (spos < 0) {
                        out.map_fail.note("cut vertex missing from the piece on " + where);
                        continue;
                    }
                    auto re = verify_oddomorphism(red.cert.phi);
                    if (!re || !re->plain)
                        out.verify_fail.note("piece certificate fails on " + where);
                    for (int i = 0; i < piece.n; ++i) {
                        if (i == spos) continue;
                        if (red.cert.report.vertex_parity[i] !=
                            cert->report.vertex_parity[red.origin[i]])
                            out.parity_fail.note("parity changed away from the cut vertex on " +
                                                 where);
                    }
                    bool flipped = red.cert.report.vertex_parity[spos] == Parity::Odd &&
                                   cert->report.vertex_parity[s] == Parity::Even;
                    if (red.odd_partner.has_value() != flipped)
                        out.partner_fail.note("odd partner flag mismatch on " + where);
                    if (red.odd_partner) {
                        ++out.partners;
                        int a = *red.odd_partner;
                        bool valid = a >= 0 && a < f.n && a != s &&
                                     !(red.component_mask >> a & 1) &&
                                     cert->phi.map[a] == cert->phi.map[s] &&
                                     cert->report.vertex_parity[a] == Parity::Odd;
                        if (!valid) out.partner_fail.note("odd partner invalid on " + where);
                    }
                    if (collect)
                        out.pairs.emplace(pair_key(piece, g), std::make_pair(piece, g));
                }
            });
        }
    });
    CutOut total;
    for (const CutOut& o : outs) total.merge(o);
    return total;
}

SuiteResult suite_cutvertex(const SuiteBounds& b) {
    int max_f = b.max_n > 0 ? b.max_n : 6;
    CutOut out = cut_sweep(max_f, 4, b.threads, false);
    Checker ck;
    ck.add("the sweep found instances", out.instances > 0,
           std::to_string(out.instances) + " instances");
    ck.add("the fast classifier agrees with verification", out.classifier.clean(),
           out.classifier.sample);
    ck.add("disconnecting images are rejected", out.reject_fail.clean(), out.reject_fail.sample);
    ck.add("the construction succeeds on every instance", out.error_fail.clean(),
           out.error_fail.sample);
    ck.add("piece maps agree with the input", out.map_fail.clean(), out.map_fail.sample);
    ck.add("every piece certificate re-verifies plain", out.verify_fail.clean(),
           out.verify_fail.sample);
    ck.add("parities persist away from the cut vertex", out.parity_fail.clean(),
           out.parity_fail.sample);
    ck.add("the odd partner fires exactly on an even-to-odd flip", out.partner_fail.clean(),
           out.partner_fail.sample);
    SuiteResult r{"cutvertex-sweep", ck.all, std::move(ck.checks), json::object()};
    r.payload["plain_certificates"] = out.plain_certs;
    r.payload["instances"] = out.instances;
    r.payload["rejections"] = out.rejected;
    r.payload["odd_partners"] = out.partners;
    r.payload["bounds"] = {{"source_max_n", max_f}, {"target_max_n", 4}};
    return r;
}

// ---------------------------------------------------------------------------
// Certificate pairs behind the monotonicity suites: weak certificates from
// the oracle searches plus the plain inputs and reduced outputs of both
// reduction sweeps, deduplicated up to isomorphism of the pair.

struct PairBank {
    std::map<std::string, std::pair<Graph, Graph>> pairs;
    long long certificates = 0;
    json bounds;
};

const PairBank& certificate_pairs(int threads) {
    static std::mutex mu;
    static std::optional<PairBank> bank;
    std::lock_guard<std::mutex> lock(mu);
    if (!bank) {
        PairBank built;
        std::vector<Graph> patterns = enumerate_graphs(6, -1, true);
        std::vector<Graph> bases;
        bases.push_back(cycle_graph(3));
        bases.push_back(complete_graph(4));
        for (const Graph& base : bases) {
            std::vector<unsigned char> hit(patterns.size(), 0);
            parallel_for(patterns.size(), threads, [&](std::size_t i) {
                hit[i] = search_oddomorphism(patterns[i], base, true, 1e8) ? 1 : 0;
            });
            for (std::size_t i = 0; i < patterns.size(); ++i) {
                if (!hit[i]) continue;
                built.pairs.emplace(pair_key(patterns[i], base),
                                    std::make_pair(patterns[i], base));
                ++built.certificates;
            }
        }
        SeparatorOut sep = separator_sweep(7, 4, 2, threads, true);
        CutOut cut = cut_sweep(6, 4, threads, true);
        for (const auto& kv : sep.pairs) built.pairs.emplace(kv.first, kv.second);
        for (const auto& kv : cut.pairs) built.pairs.emplace(kv.first, kv.second);
        built.certificates += sep.plain_certs + sep.instances + cut.plain_certs + cut.instances;
        built.bounds = {
            {"weak_search", {{"pattern_max_n", 6}, {"bases", {"C3", "K4"}}, {"budget", 1e8}}},
            {"separator_sweep", {{"source_max_n", 7}, {"target_max_n", 4}, {"separator_max", 2}}},
            {"cutvertex_sweep", {{"source_max_n", 6}, {"target_max_n", 4}}}};
        bank = std::move(built);
    }
    return *bank;
}

SuiteResult suite_monotonicity(const SuiteBounds& b) {
    const PairBank& bank = certificate_pairs(b.threads);
    ClassPredicate planar{"planar", 0};
    FailBox planar_fail;
    FailBox tw_fail;
    FailBox degree_fail;
    for (const auto& kv : bank.pairs) {
        const Graph& f = kv.second.first;
        const Graph& g = kv.second.second;
        if (class_member(f, planar) && !class_member(g, planar))
            planar_fail.note(describe_pair(f, g));
        if (exact_treewidth(f).first < exact_treewidth(g).first) tw_fail.note(describe_pair(f, g));
        if (f.max_degree() < g.max_degree()) degree_fail.note(describe_pair(f, g));
    }
    Checker ck;
    ck.add("certificate pairs collected", !bank.pairs.empty(),
           std::to_string(bank.pairs.size()) + " pairs");
    ck.add("planarity carries from source to target", planar_fail.clean(), planar_fail.sample);
    ck.add("treewidth never increases from source to target", tw_fail.clean(), tw_fail.sample);
    ck.add("maximum degree never increases from source to target", degree_fail.clean(),
           degree_fail.sample);
    SuiteResult r{"monotonicity", ck.all, std::move(ck.checks), json::object()};
    r.payload["pairs"] = bank.pairs.size();
    r.payload["certificates"] = bank.certificates;
    r.payload["bounds"] = bank.bounds;
    return r;
}

SuiteResult suite_distance(const SuiteBounds& b) {
    const PairBank& bank = certificate_pairs(b.threads);
    Checker ck;
    ck.add("certificate pairs collected", !bank.pairs.empty(),
           std::to_string(bank.pairs.size()) + " pairs");
    for (std::string name : {"edgeless", "forests", "planar"}) {
        ClassPredicate p{name, 0};
        FailBox dd_fail;
        FailBox ed_fail;
        for (const auto& kv : bank.pairs) {
            const Graph& f = kv.second.first;
            const Graph& g = kv.second.second;
            if (deletion_distance(f, p) < deletion_distance(g, p))
                dd_fail.note(describe_pair(f, g));
            if (elimination_distance(f, p) < elimination_distance(g, p))
                ed_fail.note(describe_pair(f, g));
        }
        ck.add("deletion distance never increases (" + name + ")", dd_fail.clean(),
               dd_fail.sample);
        ck.add("elimination distance never increases (" + name + ")", ed_fail.clean(),
               ed_fail.sample);
    }
    SuiteResult r{"distance-monotonicity", ck.all, std::move(ck.checks), json::object()};
    r.payload["pairs"] = bank.pairs.size();
    r.payload["certificates"] = bank.certificates;
    r.payload["bounds"] = bank.bounds;
    return r;
}

// ---------------------------------------------------------------------------
// Suite "contractor-identity": solved contractor combinations reproduce edge
// contraction exactly on random instances; infeasible target pairs are
// recorded, not failed.

Graph random_graph(std::mt19937_64& rng, int lo, int hi, bool need_edge) {
    for (;;) {
        int n = lo + int(rng() % std::uint64_t(hi - lo + 1));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        if (!need_edge || g.edge_count() > 0) return g;
    }
}

SuiteResult suite_contractor(const SuiteBounds& b) {
    std::mt19937_64 rng(b.seed);
    const int pairs = 25;
    const int patterns_per_pair = 10;
    const int max_edges = 6;
    int solved = 0;
    long long identities = 0;
    json infeasible = json::array();
    FailBox fails;
    for (int t = 0; t < pairs; ++t) {
        Graph g = random_graph(rng, 2, 4, true);
        Graph h = random_graph(rng, 2, 4, true);
        ContractorCombination alpha;
        try {
            alpha = solve_contractor(g, h, max_edges);
        } catch (const NoContractorFound&) {
            infeasible.push_back({{"g", encode_graph6(g)}, {"h", encode_graph6(h)}});
            continue;
        }
        ++solved;
        for (int k = 0; k < patterns_per_pair; ++k) {
            Graph f = random_graph(rng, 2, 5, true);
            auto es = f.edges();
            auto [u, v] = es[std::size_t(rng() % es.size())];
            Graph contracted = contract_edge(f, u, v);
            for (const Graph* target : {&g, &h}) {
                BigInt want = count_homs_big(contracted, *target);
                BigInt got = simulate_contraction(f, u, v, *target, alpha);
                ++identities;
                if (want != got)
                    fails.note("contraction count mismatch on " + encode_graph6(f) + " edge " +
                               std::to_string(u) + "-" + std::to_string(v) + " target " +
                               encode_graph6(*target));
            }
        }
    }
    Checker ck;
    ck.add("every target pair was solved or recorded infeasible",
           solved + int(infeasible.size()) == pairs,
           std::to_string(solved) + " solved, " + std::to_string(infeasible.size()) +
               " infeasible");
    ck.add("every solved pair reproduces contraction counts exactly", fails.clean(),
           fails.clean() ? std::to_string(identities) + " identities checked" : fails.sample);
    SuiteResult r{"contractor-identity", ck.all, std::move(ck.checks), json::object()};
    r.payload["target_pairs"] = pairs;
    r.payload["solved"] = solved;
    r.payload["infeasible"] = infeasible;
    r.payload["identities"] = identities;
    r.payload["bounds"] = {{"target_n", {2, 4}},
                           {"pattern_n", {2, 5}},
                           {"max_edges", max_edges},
                           {"seed", b.seed}};
    return r;
}

// ---------------------------------------------------------------------------
// Suite "tree-models": every plain oddomorphism from a tree onto P5 or
// K_{1,3} yields a verified topological model anchored at odd vertices.

SuiteResult suite_trees(const SuiteBounds& b) {
    int cap = b.max_n > 0 ? b.max_n : 7;
    std::vector<Graph> trees;
    for (const Graph& g : enumerate_graphs(cap, -1, true))
        if (is_tree(g)) trees.push_back(g);
    std::vector<Graph> targets;
    targets.push_back(path_graph(5));
    targets.push_back(complete_bipartite(1, 3));
    long long instances = 0;
    FailBox model_fail;
    FailBox anchor_fail;
    FailBox parity_fail;
    unsigned char parity[kMaxVertices];
    std::uint64_t fibre[kMaxVertices];
    for (const Graph& f : trees) {
        for (const Graph& g : targets) {
            sweep_homs(f, g, [&](const int* map) {
                if (!classify_fast(f, g, map, parity, fibre)) return;
                auto cert = verify_oddomorphism(make_hom(f, g, map));
                if (!cert || !cert->plain) {
                    model_fail.note("classifier disagrees on " + describe_pair(f, g));
                    return;
                }
                ++instances;
                TopologicalModel model;
                try {
                    model = tree_topological_model(*cert);
                } catch (const std::exception& e) {
                    model_fail.note(std::string(e.what()) + " on " + describe_pair(f, g));
                    return;
                }
                if (!verify_topological_model(model, &*cert))
                    model_fail.note("model fails verification on " + describe_pair(f, g));
                for (int v = 0; v < g.n; ++v) {
                    if (cert->phi.map[model.rho[v]] != v)
                        anchor_fail.note("anchor maps astray on " + describe_pair(f, g));
                    if (cert->report.vertex_parity[model.rho[v]] != Parity::Odd)
                        parity_fail.note("anchor is not odd on " + describe_pair(f, g));
                }
            });
        }
    }
    Checker ck;
    ck.add("the sweep found instances", instances > 0, std::to_string(instances) + " instances");
    ck.add("every model verifies with internal disjointness", model_fail.clean(),
           model_fail.sample);
    ck.add("anchors map back to their pattern vertices", anchor_fail.clean(), anchor_fail.sample);
    ck.add("anchors classify odd", parity_fail.clean(), parity_fail.sample);
    SuiteResult r{"tree-models", ck.all, std::move(ck.checks), json::object()};
    r.payload["trees"] = trees.size();
    r.payload["instances"] = instances;
    r.payload["bounds"] = {{"tree_max_n", cap}, {"targets", {"P5", "K1,3"}}};
    return r;
}

// ---------------------------------------------------------------------------
// Suite "min-excluded": for the family of all graphs on at most 4 vertices,
// the minimal excluded subgraphs of its 1-sum closure are 2-connected and
// the minimal excluded minors of its 2-sum closure are 3-connected. Both
// closures are decided by recursion on separators; one-step minimality
// suffices because the closures are subgraph- and minor-closed.

bool one_sum_member(const Graph& g) {
    for (std::uint64_t comp : components(g)) {
        Graph c = induced_subgraph(g, comp);
        if (c.n <= 4) continue;
        std::vector<int> cuts = cut_vertices(c);
        if (cuts.empty()) return false;
        int s = cuts.front();
        for (std::uint64_t piece : components(c, c.vertex_mask() & ~bit(s)))
            if (!one_sum_member(induced_subgraph(c, piece | bit(s)))) return false;
    }
    return true;
}

bool two_sum_member(const Graph& g, std::map<std::string, bool>& memo) {
    if (g.n <= 4) return true;
    std::string key = canonical_form(g).certificate;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = true;
    if (!is_connected(g)) {
        for (std::uint64_t comp : components(g))
            if (!two_sum_member(induced_subgraph(g, comp), memo)) {
                ok = false;
                break;
            }
    } else {
        ok = false;
        for (std::uint64_t smask = 1; smask < bit(g.n) && !ok; ++smask) {
            if (std::popcount(smask) > 2) continue;
            std::vector<std::uint64_t> comps = components(g, g.vertex_mask() & ~smask);
            if (comps.size() < 2) continue;
            ok = true;
            for (std::uint64_t comp : comps)
                if (!two_sum_member(glued_piece(g, comp, smask), memo)) {
                    ok = false;
                    break;
                }
        }
    }
    memo.emplace(key, ok);
    return ok;
}

SuiteResult suite_min_excluded(const SuiteBounds& b) {
    int cap = b.max_n > 0 ? b.max_n : 7;
    std::vector<Graph> all = enumerate_graphs(cap);
    std::vector<Graph> min_subgraphs;
    for (const Graph& g : all) {
        if (one_sum_member(g)) continue;
        bool minimal = true;
        for (int v = 0; v < g.n && minimal; ++v)
            if (!one_sum_member(delete_vertex(g, v))) minimal = false;
        for (auto [u, v] : g.edges()) {
            if (!minimal) break;
            Graph d = g;
            d.remove_edge(u, v);
            if (!one_sum_member(d)) minimal = false;
        }
        if (minimal) min_subgraphs.push_back(g);
    }
    std::map<std::string, bool> memo;
    std::vector<Graph> min_minors;
    for (const Graph& g : all) {
        if (two_sum_member(g, memo)) continue;
        bool minimal = true;
        for (int v = 0; v < g.n && minimal; ++v)
            if (!two_sum_member(delete_vertex(g, v), memo)) minimal = false;
        for (auto [u, v] : g.edges()) {
            if (!minimal) break;
            Graph d = g;
            d.remove_edge(u, v);
            if (!two_sum_member(d, memo)) minimal = false;
            if (minimal && !two_sum_member(contract_edge(g, u, v), memo)) minimal = false;
        }
        if (minimal) min_minors.push_back(g);
    }
    FailBox sub_fail;
    for (const Graph& g : min_subgraphs)
        if (!is_k_connected(g, 2)) sub_fail.note(encode_graph6(g));
    FailBox minor_fail;
    for (const Graph& g : min_minors)
        if (!is_k_connected(g, 3)) minor_fail.note(encode_graph6(g));
    Checker ck;
    ck.add("minimal excluded subgraphs found", !min_subgraphs.empty(),
           std::to_string(min_subgraphs.size()) + " graphs");
    ck.add("every minimal excluded subgraph is 2-connected", sub_fail.clean(), sub_fail.sample);
    ck.add("minimal excluded minors found", !min_minors.empty(),
           std::to_string(min_minors.size()) + " graphs");
    ck.add("every minimal excluded minor is 3-connected", minor_fail.clean(), minor_fail.sample);
    SuiteResult r{"min-excluded", ck.all, std::move(ck.checks), json::object()};
    json subs = json::array();
    for (const Graph& g : min_subgraphs) subs.push_back(encode_graph6(g));
    json minors = json::array();
    for (const Graph& g : min_minors) minors.push_back(encode_graph6(g));
    r.payload["minimal_excluded_subgraphs"] = subs;
    r.payload["minimal_excluded_minors"] = minors;
    r.payload["bounds"] = {{"family_max_n", 4}, {"candidate_max_n", cap}};
    return r;
}

// ---------------------------------------------------------------------------
// Suite "codec-counting": codec round-trips, counting engines against each
// other, and the pinned counting values with the CFI identification.

SuiteResult suite_codec(const SuiteBounds& b) {
    std::mt19937_64 rng(b.seed);
    const int corpus = 1000;
    FailBox codec_fail;
    for (int i = 0; i < corpus; ++i) {
        int n = int(rng() % 21);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        std::string code = encode_graph6(g);
        Graph back = decode_graph6(code);
        if (!graphs_equal(g, back) || encode_graph6(back) != code)
            codec_fail.note("round-trip differs for " + code);
    }
    std::vector<Graph> small;
    small.push_back(Graph(0));
    for (const Graph& g : enumerate_graphs(5)) small.push_back(g);
    FailBox engine_fail;
    for (const Graph& f : small)
        for (const Graph& g : small)
            if (count_homs_backtracking(f, g) != count_homs_decomposition(f, g))
                engine_fail.note("engines disagree on " + describe_pair(f, g));
    CFIPair pair = build_cfi_pair(cycle_graph(3));
    Checker ck;
    ck.add("graph6 round-trip is bit-exact on the random corpus", codec_fail.clean(),
           codec_fail.sample);
    ck.add("decomposition and backtracking counts agree on all small pairs", engine_fail.clean(),
           engine_fail.sample);
    ck.add("hom(C4, K3) = 18", count_homs(cycle_graph(4), complete_graph(3)) == 18);
    ck.add("the even CFI half of C3 is two triangles",
           are_isomorphic(pair.even, disjoint_union(cycle_graph(3), cycle_graph(3))));
    ck.add("the odd CFI half of C3 is a six-cycle", are_isomorphic(pair.odd, cycle_graph(6)));
    ck.add("hom(C3, even half) = 12", count_homs(cycle_graph(3), pair.even) == 12);
    ck.add("hom(C3, odd half) = 0", count_homs(cycle_graph(3), pair.odd) == 0);
    SuiteResult r{"codec-counting", ck.all, std::move(ck.checks), json::object()};
    r.payload["corpus"] = corpus;
    r.payload["corpus_max_n"] = 20;
    r.payload["pair_graphs"] = small.size();
    r.payload["bounds"] = {{"engine_pair_max_n", 5}, {"seed", b.seed}};
    return r;
}

// ---------------------------------------------------------------------------

using SuiteFn = SuiteResult (*)(const SuiteBounds&);

struct SuiteEntry {
    const char* id;
    SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"v8-k5", suite_v8},
    {"cfi-oracle", suite_cfi},
    {"separator-sweep", suite_separator},
    {"cutvertex-sweep", suite_cutvertex},
    {"monotonicity", suite_monotonicity},
    {"contractor-identity", suite_contractor},
    {"tree-models", suite_trees},
    {"distance-monotonicity", suite_distance},
    {"min-excluded", suite_min_excluded},
    {"codec-counting", suite_codec},
};

}  // namespace

const std::vector<std::string>& all_suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const SuiteEntry& e : kSuites) v.push_back(e.id);
        return v;
    }();
    return ids;
}

SuiteResult run_verification_suite(const std::string& id, const SuiteBounds& bounds) {
    for (const SuiteEntry& e : kSuites) {
        if (id != e.id) continue;
        try {
            return e.fn(bounds);
        } catch (const BudgetError& err) {
            SuiteResult r{id, false, {}, json::object()};
            r.checks.push_back({"budget", false, err.what()});
            return r;
        }
    }
    throw Error("unknown verification suite: " + id);
}

}  // namespace homind
