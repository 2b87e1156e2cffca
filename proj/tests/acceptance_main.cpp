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
// Acceptance runner: executes every verification suite in order and prints
// one pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "homind/suites.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto& ids = homind::all_suite_ids();
    int failed = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string& id = ids[i];
        homind::SuiteBounds bounds;
        if (id == "cfi-oracle" || id == "monotonicity" || id == "distance-monotonicity")
            bounds.threads = 4;
        auto start = clock::now();
        bool pass = false;
        std::string error;
        homind::SuiteResult result;
        try {
            result = homind::run_verification_suite(id, bounds);
            pass = result.pass;
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("criterion %2zu/%zu  %-22s %s  (%.1fs)\n", i + 1, ids.size(), id.c_str(),
                    pass ? "PASS" : "FAIL", seconds);
        if (!pass) {
            ++failed;
            if (!error.empty()) std::printf("    error: %s\n", error.c_str());
            for (const auto& check : result.checks)
                if (!check.pass)
                    std::printf("    check %s: %s\n", check.name.c_str(), check.detail.c_str());
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, ids.size());
    else std::printf("all %zu criteria passed\n", ids.size());
    return failed == 0 ? 0 : 1;
}
