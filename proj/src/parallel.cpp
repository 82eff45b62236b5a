#include "fofe/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fofe {

unsigned worker_count() {
    unsigned cap = 0;
    if (const char* env = std::getenv("FOFE_THREADS")) {
        try {
            cap = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            cap = 0;
        }
    }
    if (cap == 0) cap = std::thread::hardware_concurrency();
    return std::max(1u, cap);
}

void parallel_blocks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
    if (workers <= 1 || n == 0) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace fofe
