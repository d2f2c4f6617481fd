#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fragmentia {

// Worker-pool size: FRAGMENTIA_THREADS caps it, hardware concurrency is the
// default.
inline int thread_count() {
    if (const char *env = std::getenv("FRAGMENTIA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Runs fn(i) for i in [0, count).  Callers must write results into
// index-addressed slots and reduce in index order afterwards, so output stays
// deterministic regardless of scheduling.
template <typename F> void parallel_for(std::size_t count, F &&fn) {
    std::size_t nt = std::min<std::size_t>(std::size_t(thread_count()), count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nt; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto &t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace fragmentia
