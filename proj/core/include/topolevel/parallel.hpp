#ifndef TOPOLEVEL_PARALLEL_HPP
#define TOPOLEVEL_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace topolevel {

// Runs fn(begin, end) over a fixed chunking of [0, n).  Each index is
// processed by exactly one call regardless of thread count, so results
// written to disjoint slots are identical for any value of threads.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    std::size_t workers = static_cast<std::size_t>(threads);
    if (workers > n) workers = n;
    std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace topolevel

#endif
