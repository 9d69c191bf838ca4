#ifndef FLAGDECK_PARALLEL_HPP
#define FLAGDECK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace flagdeck {

/// Worker count: FLAGDECK_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned thread_count()
{
    if (const char* env = std::getenv("FLAGDECK_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n). Work items must be independent; results are
/// expected to be written to per-index slots so output order is fixed.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        });
}

} // namespace flagdeck

#endif
