#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace freespace {

/// Worker cap: FREESPACE_LAB_THREADS when set (floor 1), else the hardware
/// concurrency capped at 8.
inline int thread_cap() {
    if (const char* env = std::getenv("FREESPACE_LAB_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

/// Runs fn(0..count-1) across workers. Results must be written to per-index
/// slots; assembly order is then independent of scheduling.
template <typename F>
void parallel_for(int count, F&& fn) {
    const int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace freespace
