#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace trop {

// TROP_THREADS caps worker threads; default 1 (serial)
inline int env_threads() {
    const char* v = std::getenv("TROP_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    if (n < 1) return 1;
    if (n > 64) return 64;
    return n;
}

// index-parallel loop; results must be written to disjoint slots so that the
// outcome does not depend on scheduling
template <class F>
void parallel_for(size_t n, F&& f) {
    int workers = env_threads();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f]() {
            for (size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace trop
