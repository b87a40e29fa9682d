#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace navlab {

/// Worker count: hardware concurrency, capped by NAVARRO_LAB_THREADS.
inline unsigned thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("NAVARRO_LAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

/// Runs fn(i) for every i in [0, count) across the thread budget. Callers
/// write results into pre-sized storage indexed by i, so the outcome does
/// not depend on scheduling. The first exception is rethrown after joining.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(thread_budget(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                if (failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace navlab
