#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace acs {

/// Worker cap for internal parallelism: ACS_CERT_THREADS when set (clamped to
/// [1, 64]), otherwise hardware concurrency. Results never depend on the cap;
/// sweeps assign work by index and merge with order-independent reductions.
inline int thread_cap() {
    if (const char* env = std::getenv("ACS_CERT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 64L));
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

/// Runs fn(begin, end) over disjoint chunks of [0, count). fn must only write
/// through its own chunk result; the caller merges.
template <class Fn>
void parallel_chunks(long long count, int threads, Fn fn) {
    threads = std::max(1, std::min<long long>(threads, count) > 0
                              ? static_cast<int>(std::min<long long>(threads, count))
                              : 1);
    if (threads <= 1) {
        fn(0LL, count);
        return;
    }
    std::vector<std::thread> pool;
    const long long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const long long begin = t * chunk;
        const long long end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace acs
