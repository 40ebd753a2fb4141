#pragma once

#include <cstddef>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace qseq::detail {

// Worker count: QSEQ_THREADS if set and positive, otherwise the available
// hardware parallelism.
inline std::size_t thread_count() {
    if (const char* env = std::getenv("QSEQ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(begin, end) over a static partition of [0, n).  Results must be
// written to per-index slots so the outcome is independent of scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const std::size_t workers = std::min(thread_count(), n ? n : std::size_t{1});
    if (n == 0) return;
    if (workers <= 1) {
        f(std::size_t{0}, n);
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&f, begin, end] { f(begin, end); }));
    }
    for (auto& fut : futures) fut.get();
}

}  // namespace qseq::detail
