/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGC_COMMON_HPP
#define GAGC_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gagc {

using fidx = std::uint32_t;               // element index within an indexable field
using cvec = std::vector<std::uint16_t>;  // element as coefficients over the immediate base field

inline constexpr std::uint64_t kDefaultSeed = 0x67616763ULL;  // used by seeded randomized kernels
inline constexpr std::uint64_t kDefaultFieldBudget = 1ULL << 20;
inline constexpr std::uint64_t kDefaultWordBudget = 1ULL << 20;

struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Splits [0, n) into contiguous chunks and runs them on `threads` workers.
// Results must be merged deterministically by the caller.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
    if (threads <= 1 || n < 2) {
        body(0, n, 0);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t lo = std::min(n, w * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, lo, hi, w] { body(lo, hi, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gagc

#endif
