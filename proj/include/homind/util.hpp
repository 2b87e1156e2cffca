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

#ifndef HOMIND_UTIL_HPP
#define HOMIND_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace homind {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Input text could not be parsed (graph6 and friends).
struct ParseError : Error {
    using Error::Error;
};

// An exact computation would exceed the configured search budget.
struct BudgetError : Error {
    using Error::Error;
};

// A fixed-width accumulator would wrap; retry in big-integer mode.
struct OverflowError : Error {
    using Error::Error;
};

// The contractor linear system has no solution within the given basis.
struct NoContractorFound : Error {
    using Error::Error;
};

using u128 = unsigned __int128;

inline u128 checked_add(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a) throw OverflowError("128-bit accumulator overflow in addition");
    return s;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > ~u128(0) / a) throw OverflowError("128-bit accumulator overflow in multiplication");
    return a * b;
}

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

// Fixed default seed for every randomized generator; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Runs fn(i) for i in [0, n). With threads <= 1 runs inline. Work is split
// into contiguous chunks; callers own any cross-item aggregation and must
// keep per-item outputs independent so merged results stay deterministic.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::exception_ptr first_error = nullptr;
    std::mutex err_mutex;
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace homind

#endif
