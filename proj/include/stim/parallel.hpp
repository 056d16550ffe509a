#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace stim {

// Runs fn(0..n-1) over `jobs` threads in contiguous chunks. Callers get
// determinism by writing to preallocated, index-addressed slots. jobs <= 1
// (or 0 = auto) degrades to a plain loop / hardware concurrency.
inline void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const int chunk = (n + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        threads.emplace_back([&, t, lo, hi]() {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace stim
