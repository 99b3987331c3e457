#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace solchaos {

/// Effective worker count: `requested` if positive, else the SOLCHAOS_THREADS
/// environment variable, else std::thread::hardware_concurrency().
int resolve_threads(int requested);

/** Run body(i) for i in [0, n) on `threads` workers.
 *
 *  Work items must be independent; callers store results by index so the
 *  outcome cannot depend on scheduling. The first exception thrown by a
 *  worker is rethrown on the calling thread.
 */
template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
    threads = resolve_threads(threads);
    if (threads > static_cast<int>(n)) threads = static_cast<int>(n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}
