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

#include "homind/json_io.hpp"

#include <string>
#include <vector>

#include "homind/graph6.hpp"
#include "homind/util.hpp"

namespace homind {

namespace {

using nlohmann::json;

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::Odd:
            return "odd";
        case Parity::Even:
            return "even";
        case Parity::Undefined:
            return "undefined";
    }
    return "undefined";
}

}  // namespace

json graph_to_json(const Graph& g) {
    return json{{"graph6", encode_graph6(g)}, {"n", g.n}, {"m", g.edge_count()}};
}

Graph graph_from_json(const json& j) {
    if (j.is_string()) return decode_graph6(j.get<std::string>());
    if (!j.is_object() || !j.contains("graph6"))
        throw ParseError("graph JSON needs a graph6 string");
    return decode_graph6(j.at("graph6").get<std::string>());
}

json family_to_json(const FamilySpec& spec) {
    json j{{"kind", family_kind_name(spec.kind)}, {"max_n", spec.max_n}, {"max_m", spec.max_m}};
    if (spec.kind == FamilySpec::Kind::PredicateFiltered) j["predicate"] = spec.predicate;
    if (spec.kind == FamilySpec::Kind::UserCorpus) {
        json corpus = json::array();
        for (const Graph& g : spec.corpus) corpus.push_back(encode_graph6(g));
        j["corpus"] = corpus;
    }
    return j;
}

FamilySpec family_from_json(const json& j) {
    FamilySpec spec;
    spec.kind = parse_family_kind(j.at("kind").get<std::string>());
    spec.max_n = j.at("max_n").get<int>();
    spec.max_m = j.value("max_m", -1);
    spec.predicate = j.value("predicate", std::string());
    if (j.contains("corpus"))
        for (const auto& entry : j.at("corpus"))
            spec.corpus.push_back(decode_graph6(entry.get<std::string>()));
    return spec;
}

json hom_to_json(const Homomorphism& phi) {
    return json{{"source", encode_graph6(phi.source)},
                {"target", encode_graph6(phi.target)},
                {"map", phi.map}};
}

Homomorphism hom_from_json(const json& j) {
    Homomorphism phi;
    phi.source = decode_graph6(j.at("source").get<std::string>());
    phi.target = decode_graph6(j.at("target").get<std::string>());
    phi.map = j.at("map").get<std::vector<int>>();
    return phi;
}

json certificate_to_json(const OddoCertificate& cert) {
    json j = hom_to_json(cert.phi);
    j["plain"] = cert.plain;
    json parity = json::array();
    for (Parity p : cert.report.vertex_parity) parity.push_back(parity_name(p));
    j["parity"] = parity;
    j["fibre_odd_count"] = cert.report.fibre_odd_count;
    if (cert.weak_vertices) {
        json vertices = json::array();
        for (int v = 0; v < cert.phi.source.n; ++v)
            if ((*cert.weak_vertices >> v) & 1) vertices.push_back(v);
        j["weak_vertices"] = vertices;
    }
    if (cert.weak_edges) {
        json edges = json::array();
        for (const auto& [u, v] : *cert.weak_edges) edges.push_back(json::array({u, v}));
        j["weak_edges"] = edges;
    }
    return j;
}

json separator_instance_to_json(const SeparatorInstance& instance) {
    json rows = json::array();
    for (int r = 0; r < instance.parity.rows; ++r) rows.push_back(instance.parity.bits[r]);
    return json{{"certificate", certificate_to_json(instance.input)},
                {"separator", instance.separator},
                {"components", instance.components},
                {"target_components", instance.target_components},
                {"parity_rows", rows},
                {"parity_cols", instance.parity.cols},
                {"chosen", instance.chosen},
                {"groups", instance.groups}};
}

json combination_to_json(const ContractorCombination& alpha) {
    json terms = json::array();
    for (const auto& [term, coeff] : alpha.terms)
        terms.push_back(json{{"expr", term.expression},
                             {"num", boost::multiprecision::numerator(coeff).str()},
                             {"den", boost::multiprecision::denominator(coeff).str()}});
    return terms;
}

json report_to_json(const ExperimentReport& report) {
    return json{{"schema_version", kReportSchemaVersion},
                {"command", report.command},
                {"parameters", report.parameters},
                {"seed", report.seed},
                {"wall_time_seconds", report.wall_time_seconds},
                {"payload", report.payload},
                {"bounds", report.bounds},
                {"pass", report.pass}};
}

}  // namespace homind
