#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fermiscope {

/// Worker count: FERMI_SCOPE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
inline std::size_t thread_budget() {
    if (const char* env = std::getenv("FERMI_SCOPE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Run body(i) for i in [0, n) on contiguous static chunks. Results must be
/// written to disjoint locations; output is independent of the worker count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fermiscope
