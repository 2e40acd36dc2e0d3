#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace orlicz {

/// Worker count: ORLICZ_WORKBENCH_THREADS if set, hardware concurrency
/// otherwise. This only sizes the pool; batch results are written by index
/// and are identical for any thread count.
inline int default_thread_count() {
    if (const char* env = std::getenv("ORLICZ_WORKBENCH_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) on a small thread pool with a strided
/// partition. fn must only write to per-index slots.
template <typename Fn>
void parallel_for(int count, Fn&& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    threads = std::min(threads, count > 0 ? count : 1);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < count; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace orlicz
