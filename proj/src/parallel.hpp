#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fibcube::detail {

// FIBCUBE_THREADS caps the worker count; unset means hardware concurrency
inline unsigned worker_limit(int jobs) {
    unsigned limit = std::thread::hardware_concurrency();
    if (limit == 0) limit = 1;
    if (const char* env = std::getenv("FIBCUBE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < limit)
            limit = static_cast<unsigned>(v);
    }
    if (jobs >= 1 && static_cast<unsigned>(jobs) < limit)
        limit = static_cast<unsigned>(jobs);
    return limit;
}

// runs fn(0..count-1), possibly on several threads; rethrows the first
// exception after all workers finish
inline void parallel_cells(int count, const std::function<void(int)>& fn) {
    const unsigned workers = worker_limit(count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace fibcube::detail
