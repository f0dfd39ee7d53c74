#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zerogeom {

// Evaluates fn(0), ..., fn(count - 1) with at most `jobs` worker threads and
// returns the results in index order, so output is deterministic regardless
// of scheduling. fn must be safe to call concurrently; the first exception
// thrown by any call is rethrown after all workers finish.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned jobs)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(count);
    if (count == 0) return out;
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;

    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_lock);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace zerogeom
