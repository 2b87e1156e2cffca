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
// Command-line surface. Every subcommand prints an ExperimentReport (full
// JSON with --json) carrying the command, its parameters, the seed, and the
// enumeration bounds behind each claim. Exit code 0 iff the report passes.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homind/canonical.hpp"
#include "homind/cfi.hpp"
#include "homind/classes.hpp"
#include "homind/contractor.hpp"
#include "homind/family.hpp"
#include "homind/graph.hpp"
#include "homind/graph6.hpp"
#include "homind/hom.hpp"
#include "homind/json_io.hpp"
#include "homind/oddo.hpp"
#include "homind/reductions.hpp"
#include "homind/suites.hpp"
#include "homind/util.hpp"

namespace {

using namespace homind;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Globals {
    int max_n = -1;
    double budget = -1.0;
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    bool json_output = false;
    bool bigint = false;
};

int g_exit = 0;

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int parse_int(const std::string& text) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + text + "'");
    }
    if (pos != text.size()) throw ParseError("not an integer: '" + text + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_int(item));
    }
    return out;
}

std::uint64_t vertex_list_mask(const std::vector<int>& vertices, int n) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        mask |= std::uint64_t(1) << v;
    }
    return mask;
}

// Accepts a graph6 record, @file (first non-blank line), or a named
// construction: K<n>, C<n>, P<n>, K<a>,<b>, star:<leaves>, petersen, v8.
// The named forms never collide with graph6: digits are outside its alphabet.
// A bare "@" is the one-vertex graph; a longer record never starts with '@'.
Graph parse_graph_arg(const std::string& raw) {
    std::string text = trim(raw);
    if (text.empty()) throw ParseError("empty graph argument");
    if (text.size() > 1 && text[0] == '@') {
        std::string path = text.substr(1);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open graph file " + path);
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty()) return decode_graph6(line);
        }
        throw ParseError("no graph6 record in " + path);
    }
    if (text == "petersen") return petersen_graph();
    if (text == "v8" || text == "V8") return wagner_v8();
    if (text.rfind("star:", 0) == 0) return star_graph(parse_int(text.substr(5)));
    if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'C' || text[0] == 'P') &&
        text.find_first_not_of("0123456789,", 1) == std::string::npos) {
        std::string rest = text.substr(1);
        std::size_t comma = rest.find(',');
        if (comma == std::string::npos) {
            int n = parse_int(rest);
            if (text[0] == 'K') return complete_graph(n);
            if (text[0] == 'C') return cycle_graph(n);
            return path_graph(n);
        }
        if (text[0] == 'K')
            return complete_bipartite(parse_int(rest.substr(0, comma)),
                                      parse_int(rest.substr(comma + 1)));
    }
    return decode_graph6(text);
}

OddoCertificate plain_certificate(const Graph& f, const Graph& g, const std::vector<int>& map) {
    auto cert = verify_oddomorphism({f, g, map});
    if (!cert) throw PreconditionError("the map is a homomorphism but not a plain oddomorphism");
    return *cert;
}

void emit(ExperimentReport& report, const Globals& globals, Clock::time_point start) {
    report.seed = globals.seed;
    report.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!report.pass) g_exit = 1;
    if (globals.json_output) {
        std::cout << report_to_json(report).dump(2) << "\n";
        return;
    }
    std::cout << "command: " << report.command << "\n";
    std::cout << "pass: " << (report.pass ? "true" : "false") << "\n";
    if (!report.bounds.empty()) std::cout << "bounds: " << report.bounds.dump() << "\n";
    std::cout << report.payload.dump(2) << "\n";
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex_id(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[std::size_t(i)] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

void run_ingest(const Globals& globals, const std::vector<std::string>& files,
                const std::string& out) {
    namespace fs = std::filesystem;
    auto start = Clock::now();
    ExperimentReport report;
    report.command = "corpus ingest";
    report.parameters = {{"files", files}, {"out", out}};

    fs::path out_dir(out);
    fs::create_directories(out_dir / "graphs");
    fs::path index_path = out_dir / "index.json";

    std::map<std::string, json> entries;  // canonical graph6 -> index entry
    std::set<std::string> ids;
    if (fs::exists(index_path)) {
        std::ifstream in(index_path);
        json idx = json::parse(in);
        for (const auto& e : idx.at("graphs")) {
            entries[e.at("graph6").get<std::string>()] = e;
            ids.insert(e.at("id").get<std::string>());
        }
    }

    int added = 0, duplicates = 0, records = 0;
    json errors = json::array();
    for (const std::string& file : files) {
        std::ifstream in(file);
        if (!in) {
            errors.push_back(file + ": cannot open");
            continue;
        }
        int line_no = 0;
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            line = trim(line);
            if (line.empty()) continue;
            ++records;
            try {
                Graph g = decode_graph6(line);
                CanonicalForm cf = canonical_form(g, {}, std::max(20, g.n));
                std::vector<int> pos(std::size_t(g.n));
                for (int i = 0; i < g.n; ++i) pos[std::size_t(cf.order[std::size_t(i)])] = i;
                Graph canon(g.n);
                for (auto [u, v] : g.edges()) canon.add_edge(pos[std::size_t(u)], pos[std::size_t(v)]);
                std::string key = encode_graph6(canon);
                if (entries.count(key)) {
                    ++duplicates;
                    continue;
                }
                std::string id = hex_id(fnv1a(key));
                while (ids.count(id)) id.push_back('x');
                ids.insert(id);
                entries[key] = json{{"id", id}, {"graph6", key}, {"n", canon.n}, {"m", canon.edge_count()}};
                std::ofstream gout(out_dir / "graphs" / (id + ".g6"));
                gout << key << "\n";
                ++added;
            } catch (const Error& e) {
                errors.push_back(file + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
    }

    std::vector<json> sorted;
    sorted.reserve(entries.size());
    for (const auto& [key, entry] : entries) sorted.push_back(entry);
    std::stable_sort(sorted.begin(), sorted.end(), [](const json& a, const json& b) {
        if (a.at("n") != b.at("n")) return a.at("n") < b.at("n");
        return a.at("graph6") < b.at("graph6");
    });
    json idx = {{"schema_version", kReportSchemaVersion}, {"count", sorted.size()}, {"graphs", sorted}};
    std::ofstream iout(index_path);
    iout << idx.dump(2) << "\n";

    report.payload = {{"out", out_dir.string()},     {"records", records},
                      {"added", added},              {"duplicates", duplicates},
                      {"corpus_size", sorted.size()}, {"errors", errors}};
    report.bounds = {{"dedupe", "canonical form, exact"}};
    report.pass = errors.empty();
    for (const auto& e : errors) std::cerr << "error: " << e.get<std::string>() << "\n";
    emit(report, globals, start);
}

}  // namespace

int main(int argc, char** argv) {
    Globals globals;
    CLI::App app{"homomorphism indistinguishability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-n", globals.max_n, "enumeration cap on vertex count")
        ->envname("HOMIND_MAX_N");
    app.add_option("--budget", globals.budget, "search budget (states)")->envname("HOMIND_BUDGET");
    app.add_option("--seed", globals.seed, "seed for randomized sweeps")->envname("HOMIND_SEED");
    app.add_option("--threads", globals.threads, "worker pool size")->envname("HOMIND_THREADS");
    app.add_flag("--json", globals.json_output, "emit the full JSON report")
        ->envname("HOMIND_JSON");
    app.add_flag("--bigint", globals.bigint, "count with big integers instead of 128-bit")
        ->envname("HOMIND_BIGINT");

    // hom
    auto* hom_cmd = app.add_subcommand("hom", "homomorphism counting");
    hom_cmd->require_subcommand(1);
    hom_cmd->fallthrough();
    {
        auto st = std::make_shared<std::pair<std::string, std::string>>();
        auto* c = hom_cmd->add_subcommand("count", "count homomorphisms source -> target");
        c->fallthrough();
        c->add_option("source", st->first, "pattern graph")->required();
        c->add_option("target", st->second, "target graph")->required();
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "hom count";
            report.parameters = {{"source", st->first}, {"target", st->second}, {"bigint", globals.bigint}};
            Graph f = parse_graph_arg(st->first);
            Graph g = parse_graph_arg(st->second);
            std::string count = globals.bigint ? count_homs_big(f, g).str()
                                               : u128_to_string(count_homs(f, g));
            report.payload = {{"count", count}, {"mode", globals.bigint ? "bigint" : "u128"}};
            report.bounds = {{"exact", true}};
            report.pass = true;
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string g, h, kind = "all-graphs", predicate;
            int max_m = -1;
        };
        auto st = std::make_shared<St>();
        auto* c = hom_cmd->add_subcommand("distinguish",
                                          "find a family member with different counts into g and h");
        c->fallthrough();
        c->add_option("first", st->g, "first graph")->required();
        c->add_option("second", st->h, "second graph")->required();
        c->add_option("--kind", st->kind, "family kind (all-graphs, all-connected, trees, planar)");
        c->add_option("--predicate", st->predicate, "class predicate filter, e.g. tw_le:2");
        c->add_option("--max-m", st->max_m, "edge cap for the family");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "hom distinguish";
            FamilySpec family;
            family.kind = st->predicate.empty() ? parse_family_kind(st->kind)
                                                : FamilySpec::Kind::PredicateFiltered;
            family.max_n = globals.max_n > 0 ? globals.max_n : 5;
            family.max_m = st->max_m;
            family.predicate = st->predicate;
            report.parameters = {{"g", st->g},
                                 {"h", st->h},
                                 {"family", family_to_json(family)}};
            Graph g = parse_graph_arg(st->g);
            Graph h = parse_graph_arg(st->h);
            PredicateResolver resolver = [](const std::string& token) {
                return class_predicate(token);
            };
            auto found = find_distinguisher(g, h, family, resolver);
            if (found) {
                report.payload = {{"found", true},
                                  {"pattern", graph_to_json(*found)},
                                  {"count_g", count_homs_big(*found, g).str()},
                                  {"count_h", count_homs_big(*found, h).str()}};
            } else {
                report.payload = {{"found", false}};
            }
            report.bounds = {{"family_max_n", family.max_n}, {"family_max_m", family.max_m}};
            report.pass = found.has_value();
            emit(report, globals, start);
        });
    }

    // cfi
    auto* cfi_cmd = app.add_subcommand("cfi", "even/odd gadget pairs");
    cfi_cmd->require_subcommand(1);
    cfi_cmd->fallthrough();
    {
        struct St {
            std::string base;
            int twist = 0;
        };
        auto st = std::make_shared<St>();
        auto* c = cfi_cmd->add_subcommand("build", "build the gadget pair over a connected base");
        c->fallthrough();
        c->add_option("base", st->base, "base graph")->required();
        c->add_option("--twist", st->twist, "base vertex receiving the odd twist");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "cfi build";
            report.parameters = {{"base", st->base}, {"twist", st->twist}};
            CFIPair pair = build_cfi_pair(parse_graph_arg(st->base), st->twist);
            report.payload = {{"base", graph_to_json(pair.base)},
                              {"twist", pair.twist},
                              {"even", graph_to_json(pair.even)},
                              {"odd", graph_to_json(pair.odd)}};
            report.bounds = {{"exact", true}};
            report.pass = true;
            emit(report, globals, start);
        });
    }

    // oddo
    auto* oddo_cmd = app.add_subcommand("oddo", "oddomorphism verification and search");
    oddo_cmd->require_subcommand(1);
    oddo_cmd->fallthrough();
    {
        struct St {
            std::string source, target, map;
            bool weak = false;
        };
        auto st = std::make_shared<St>();
        auto* c = oddo_cmd->add_subcommand("verify", "classify a given homomorphism");
        c->fallthrough();
        c->add_option("source", st->source, "source graph")->required();
        c->add_option("target", st->target, "target graph")->required();
        c->add_option("--map", st->map, "comma-separated images, one per source vertex")
            ->required();
        c->add_flag("--weak", st->weak, "fall back to a weak certificate if not plain");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "oddo verify";
            report.parameters = {{"source", st->source},
                                 {"target", st->target},
                                 {"map", st->map},
                                 {"weak", st->weak}};
            Graph f = parse_graph_arg(st->source);
            Graph g = parse_graph_arg(st->target);
            Homomorphism phi{f, g, parse_int_list(st->map)};
            auto cert = verify_oddomorphism(phi);
            if (!cert && st->weak)
                cert = globals.budget > 0 ? verify_weak_oddomorphism(phi, globals.budget)
                                          : verify_weak_oddomorphism(phi);
            if (cert) {
                report.payload = {{"certificate", certificate_to_json(*cert)}};
            } else {
                report.payload = {{"certificate", nullptr},
                                  {"parity", certificate_to_json(OddoCertificate{
                                                 phi, classify_parity(phi), false, {}, {}})
                                                 .at("parity")}};
            }
            report.bounds = {{"exact", true}};
            report.pass = cert.has_value();
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string source, target;
            bool weak = false;
        };
        auto st = std::make_shared<St>();
        auto* c = oddo_cmd->add_subcommand("search", "search all homomorphisms for a certificate");
        c->fallthrough();
        c->add_option("source", st->source, "source graph")->required();
        c->add_option("target", st->target, "target graph")->required();
        c->add_flag("--weak", st->weak, "accept weak certificates");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "oddo search";
            report.parameters = {{"source", st->source},
                                 {"target", st->target},
                                 {"weak", st->weak}};
            Graph f = parse_graph_arg(st->source);
            Graph g = parse_graph_arg(st->target);
            double budget = globals.budget > 0 ? globals.budget : 1e8;
            auto cert = search_oddomorphism(f, g, st->weak, budget);
            report.payload = cert ? json{{"certificate", certificate_to_json(*cert)}}
                                  : json{{"certificate", nullptr}};
            report.bounds = {{"budget", budget}};
            report.pass = cert.has_value();
            emit(report, globals, start);
        });
    }

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "certificate reductions");
    reduce_cmd->require_subcommand(1);
    reduce_cmd->fallthrough();
    {
        struct St {
            std::string source, target, map;
            int vertex = -1;
        };
        auto st = std::make_shared<St>();
        auto* c = reduce_cmd->add_subcommand("cut", "restrict a plain certificate at a cut vertex");
        c->fallthrough();
        c->add_option("source", st->source, "source graph")->required();
        c->add_option("target", st->target, "target graph")->required();
        c->add_option("--map", st->map, "comma-separated images")->required();
        c->add_option("--vertex", st->vertex, "cut vertex of the source")->required();
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "reduce cut";
            report.parameters = {{"source", st->source},
                                 {"target", st->target},
                                 {"map", st->map},
                                 {"vertex", st->vertex}};
            auto cert = plain_certificate(parse_graph_arg(st->source), parse_graph_arg(st->target),
                                          parse_int_list(st->map));
            CutVertexReduction red = cut_vertex_reduce(cert, st->vertex);
            json component = json::array();
            for (int v = 0; v < cert.phi.source.n; ++v)
                if ((red.component_mask >> v) & 1) component.push_back(v);
            report.payload = {{"component_index", red.component_index},
                              {"component", component},
                              {"origin", red.origin},
                              {"certificate", certificate_to_json(red.cert)},
                              {"odd_partner", red.odd_partner ? json(*red.odd_partner) : json(nullptr)}};
            report.bounds = {{"exact", true}};
            report.pass = true;
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string source, target, map, separator;
        };
        auto st = std::make_shared<St>();
        auto* c = reduce_cmd->add_subcommand("separator",
                                             "shrink a plain certificate across a separator");
        c->fallthrough();
        c->add_option("source", st->source, "source graph")->required();
        c->add_option("target", st->target, "target graph")->required();
        c->add_option("--map", st->map, "comma-separated images")->required();
        c->add_option("--separator", st->separator, "comma-separated separator vertices");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "reduce separator";
            report.parameters = {{"source", st->source},
                                 {"target", st->target},
                                 {"map", st->map},
                                 {"separator", st->separator}};
            auto cert = plain_certificate(parse_graph_arg(st->source), parse_graph_arg(st->target),
                                          parse_int_list(st->map));
            std::uint64_t mask = vertex_list_mask(parse_int_list(st->separator), cert.phi.source.n);
            SeparatorReduction red = separator_reduce(cert, mask);
            report.payload = {{"instance", separator_instance_to_json(red.instance)},
                              {"reduced", certificate_to_json(red.reduced)}};
            report.bounds = {{"exact", true}};
            report.pass = true;
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string source, target, map, kind = "all-graphs", predicate;
            int s = 1, family_max_n = 0, family_max_m = -1;
        };
        auto st = std::make_shared<St>();
        auto* c = reduce_cmd->add_subcommand(
            "cliquesum", "strip clique-sum pieces until the survivor lies in a family");
        c->fallthrough();
        c->add_option("source", st->source, "source graph")->required();
        c->add_option("target", st->target, "target graph")->required();
        c->add_option("--map", st->map, "comma-separated images")->required();
        c->add_option("-s,--clique", st->s, "largest separator size to remove")->required();
        c->add_option("--family-kind", st->kind, "family kind for the survivor");
        c->add_option("--family-predicate", st->predicate, "class predicate for the survivor");
        c->add_option("--family-max-n", st->family_max_n,
                      "vertex cap of the family (default: source order)");
        c->add_option("--family-max-m", st->family_max_m, "edge cap of the family");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "reduce cliquesum";
            auto cert = plain_certificate(parse_graph_arg(st->source), parse_graph_arg(st->target),
                                          parse_int_list(st->map));
            FamilySpec family;
            family.kind = st->predicate.empty() ? parse_family_kind(st->kind)
                                                : FamilySpec::Kind::PredicateFiltered;
            family.max_n = st->family_max_n > 0 ? st->family_max_n : cert.phi.source.n;
            family.max_m = st->family_max_m;
            family.predicate = st->predicate;
            report.parameters = {{"source", st->source},
                                 {"target", st->target},
                                 {"map", st->map},
                                 {"s", st->s},
                                 {"family", family_to_json(family)}};
            OddoCertificate survivor = reduce_clique_sum(cert, family, st->s);
            report.payload = {{"survivor", graph_to_json(survivor.phi.source)},
                              {"certificate", certificate_to_json(survivor)}};
            report.bounds = {{"family_max_n", family.max_n}};
            report.pass = true;
            emit(report, globals, start);
        });
    }

    // class
    auto* class_cmd = app.add_subcommand("class", "graph class predicates and distances");
    class_cmd->require_subcommand(1);
    class_cmd->fallthrough();
    {
        auto st = std::make_shared<std::pair<std::string, std::string>>();
        auto* c = class_cmd->add_subcommand("check", "test membership in a named class");
        c->fallthrough();
        c->add_option("predicate", st->first, "predicate token, e.g. planar, tw_le:2, p_k:2")
            ->required();
        c->add_option("graph", st->second, "graph to test")->required();
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "class check";
            report.parameters = {{"predicate", st->first}, {"graph", st->second}};
            Graph g = parse_graph_arg(st->second);
            bool member = class_member(g, parse_class_predicate(st->first));
            report.payload = {{"member", member}, {"graph", graph_to_json(g)}};
            report.bounds = {{"exact", true}};
            report.pass = member;
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string predicate, graph;
            bool elimination = false;
        };
        auto st = std::make_shared<St>();
        auto* c = class_cmd->add_subcommand("distance", "deletion or elimination distance to a class");
        c->fallthrough();
        c->add_option("predicate", st->predicate, "predicate token")->required();
        c->add_option("graph", st->graph, "graph to measure")->required();
        c->add_flag("--elimination", st->elimination, "recursive elimination distance");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "class distance";
            report.parameters = {{"predicate", st->predicate},
                                 {"graph", st->graph},
                                 {"elimination", st->elimination}};
            Graph g = parse_graph_arg(st->graph);
            ClassPredicate p = parse_class_predicate(st->predicate);
            int d = st->elimination ? elimination_distance(g, p) : deletion_distance(g, p);
            report.payload = {{"distance", d},
                              {"mode", st->elimination ? "elimination" : "deletion"}};
            report.bounds = {{"exact", true}};
            report.pass = true;
            emit(report, globals, start);
        });
    }

    // contractor
    auto* contractor_cmd = app.add_subcommand("contractor", "series-parallel contractor algebra");
    contractor_cmd->require_subcommand(1);
    contractor_cmd->fallthrough();
    {
        struct St {
            std::string g, h;
            int max_edges = 4;
        };
        auto st = std::make_shared<St>();
        auto* c = contractor_cmd->add_subcommand(
            "solve", "find one rational combination that is the identity on both targets");
        c->fallthrough();
        c->add_option("target1", st->g, "first target")->required();
        c->add_option("target2", st->h, "second target (default: same as the first)");
        c->add_option("--max-edges", st->max_edges, "largest term size in the basis");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "contractor solve";
            report.parameters = {{"g", st->g},
                                 {"h", st->h.empty() ? st->g : st->h},
                                 {"max_edges", st->max_edges}};
            Graph g = parse_graph_arg(st->g);
            Graph h = st->h.empty() ? g : parse_graph_arg(st->h);
            report.bounds = {{"max_edges", st->max_edges}};
            try {
                ContractorCombination alpha = solve_contractor(g, h, st->max_edges);
                report.payload = {{"feasible", true}, {"combination", combination_to_json(alpha)}};
                report.pass = true;
            } catch (const NoContractorFound& e) {
                report.payload = {{"feasible", false}, {"reason", e.what()}};
                report.pass = false;
            }
            emit(report, globals, start);
        });
    }
    {
        struct St {
            std::string f, g;
            int u = -1, v = -1, max_edges = 4;
        };
        auto st = std::make_shared<St>();
        auto* c = contractor_cmd->add_subcommand(
            "simulate", "reproduce hom counts of an edge contraction through a contractor");
        c->fallthrough();
        c->add_option("source", st->f, "graph whose edge is contracted")->required();
        c->add_option("u", st->u, "edge endpoint")->required();
        c->add_option("v", st->v, "edge endpoint")->required();
        c->add_option("target", st->g, "target graph")->required();
        c->add_option("--max-edges", st->max_edges, "largest term size in the basis");
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "contractor simulate";
            report.parameters = {{"source", st->f},
                                 {"u", st->u},
                                 {"v", st->v},
                                 {"target", st->g},
                                 {"max_edges", st->max_edges}};
            Graph f = parse_graph_arg(st->f);
            Graph g = parse_graph_arg(st->g);
            ContractorCombination alpha = solve_contractor(g, g, st->max_edges);
            BigInt simulated = simulate_contraction(f, st->u, st->v, g, alpha);
            BigInt direct = count_homs_big(contract_edge(f, st->u, st->v), g);
            report.payload = {{"combination", combination_to_json(alpha)},
                              {"simulated", simulated.str()},
                              {"direct", direct.str()},
                              {"equal", simulated == direct}};
            report.bounds = {{"max_edges", st->max_edges}};
            report.pass = simulated == direct;
            emit(report, globals, start);
        });
    }

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "verification suites");
    suite_cmd->require_subcommand(1);
    suite_cmd->fallthrough();
    {
        auto st = std::make_shared<std::string>();
        auto* c = suite_cmd->add_subcommand("run", "run one verification suite by id");
        c->fallthrough();
        c->add_option("id", *st, "suite id; see README for the list")->required();
        c->callback([st, &globals]() {
            auto start = Clock::now();
            ExperimentReport report;
            report.command = "suite run";
            SuiteBounds bounds;
            bounds.max_n = globals.max_n;
            bounds.budget = globals.budget > 0 ? static_cast<long long>(globals.budget) : -1;
            bounds.seed = globals.seed;
            bounds.threads = globals.threads;
            report.parameters = {{"id", *st},
                                 {"max_n", bounds.max_n},
                                 {"budget", bounds.budget},
                                 {"threads", bounds.threads}};
            SuiteResult result = run_verification_suite(*st, bounds);
            json checks = json::array();
            for (const auto& check : result.checks)
                checks.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
            report.payload = {{"id", result.id}, {"checks", checks}, {"audit", result.payload}};
            report.bounds = {{"max_n", bounds.max_n},
                             {"budget", bounds.budget},
                             {"seed", bounds.seed},
                             {"threads", bounds.threads}};
            report.pass = result.pass;
            if (!globals.json_output)
                for (const auto& check : result.checks)
                    if (!check.pass)
                        std::cerr << "check failed: " << check.name << ": " << check.detail << "\n";
            emit(report, globals, start);
        });
    }

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "graph6 corpus management");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->fallthrough();
    {
        struct St {
            std::vector<std::string> files;
            std::string out = "corpus";
        };
        auto st = std::make_shared<St>();
        auto* c = corpus_cmd->add_subcommand("ingest",
                                             "ingest graph6 files, dedupe, and index the corpus");
        c->fallthrough();
        c->add_option("files", st->files, "graph6 files, one record per line")->required();
        c->add_option("--out", st->out, "corpus directory (graphs/ plus index.json)");
        c->callback([st, &globals]() { run_ingest(globals, st->files, st->out); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const homind::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
