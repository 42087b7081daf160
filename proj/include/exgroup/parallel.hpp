#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace exg {

/// Clamp a requested thread count to something usable (>= 1).
inline int resolve_threads(int requested) {
    if (requested < 1) return 1;
    return requested;
}

/// Run fn(begin, end) over [0, count) in contiguous chunks, one per thread.
/// Callers are responsible for writing results to disjoint, preallocated slots
/// so the outcome does not depend on the schedule.
template <class F>
void parallel_chunks(std::int64_t count, int threads, F&& fn) {
    threads = resolve_threads(threads);
    if (count <= 0) return;
    if (threads == 1 || count == 1) {
        fn(std::int64_t{0}, count);
        return;
    }
    if (std::int64_t(threads) > count) threads = int(count);
    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    const std::int64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = std::int64_t(t) * chunk;
        const std::int64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace exg
