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
// JSON views of the library's domain types, for reports and CLI payloads.
// Graphs travel as graph6 strings; loaded homomorphisms are re-verified by
// the caller, never trusted.

#ifndef HOMIND_JSON_IO_HPP
#define HOMIND_JSON_IO_HPP

#include <cstdint>
#include <string>

#include "homind/contractor.hpp"
#include "homind/family.hpp"
#include "homind/hom.hpp"
#include "homind/oddo.hpp"
#include "homind/reductions.hpp"
#include "json.hpp"

namespace homind {

// Bumped whenever a serialized field changes meaning.
inline constexpr const char* kReportSchemaVersion = "1";

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

nlohmann::json hom_to_json(const Homomorphism& phi);
Homomorphism hom_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const OddoCertificate& cert);

nlohmann::json separator_instance_to_json(const SeparatorInstance& instance);

nlohmann::json combination_to_json(const ContractorCombination& alpha);

// One verification or construction run, replayable from parameters + seed.
struct ExperimentReport {
    std::string command;
    nlohmann::json parameters;
    std::uint64_t seed = kDefaultSeed;
    double wall_time_seconds = 0.0;
    nlohmann::json payload;
    nlohmann::json bounds;  // enumeration bounds backing every claim
    bool pass = true;
};

nlohmann::json report_to_json(const ExperimentReport& report);

}  // namespace homind

#endif  // HOMIND_JSON_IO_HPP
