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
// Verification suites: bounded exhaustive sweeps that rerun the library's
// constructions and assert their structural guarantees on everything found.
// Each suite reports named checks plus a payload recording instance counts
// and the enumeration bounds behind every claim.

#ifndef HOMIND_SUITES_HPP
#define HOMIND_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "homind/util.hpp"

namespace homind {

struct SuiteBounds {
    int max_n = -1;         // principal enumeration cap; -1 takes the suite default
    long long budget = -1;  // search budget; -1 takes the suite default
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
};

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // sample witness on failure, counts on success
};

struct SuiteResult {
    std::string id;
    bool pass = false;
    std::vector<SuiteCheck> checks;
    nlohmann::json payload;
};

const std::vector<std::string>& all_suite_ids();

// Runs one suite. Throws Error on an unknown id. A budget overrun surfaces
// as a failing check named "budget" rather than an exception.
SuiteResult run_verification_suite(const std::string& id, const SuiteBounds& bounds = {});

}  // namespace homind

#endif  // HOMIND_SUITES_HPP
