#ifndef CISSA_SRC_PARALLEL_HPP
#define CISSA_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace cissa::detail {

/// Worker cap from CISSA_THREADS (0 or unset = hardware concurrency).
inline int thread_budget() {
    int budget = 0;
    if (const char* env = std::getenv("CISSA_THREADS")) {
        budget = std::atoi(env);
    }
    if (budget <= 0) {
        budget = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(budget, 1);
}

/// Runs fn(i) for i in [0, n) across up to thread_budget() threads.
/// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_for(Eigen::Index n, Fn&& fn) {
    const int workers = static_cast<int>(
        std::min<Eigen::Index>(thread_budget(), n));
    if (workers <= 1) {
        for (Eigen::Index i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (Eigen::Index i = w; i < n; i += workers) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace cissa::detail

#endif
