#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace taildep {

// Worker cap: TAILDEP_THREADS if set (>=1), else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("TAILDEP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Runs body(i) for i in [0, n) across workers. Each index is claimed once;
// results must be written to per-index slots so that a later sequential
// reduction is order-independent of the scheduling.
template <class Body>
void parallel_for_index(std::size_t n, Body&& body) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n ? n : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace taildep
