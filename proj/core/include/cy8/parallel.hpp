#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cy8 {

// Deterministic chunked reduction: the index space [0, total) is cut into a
// fixed number of chunks independent of the worker count; per-chunk partial
// results are combined in chunk order. Integer sums are order-independent,
// so any width produces identical totals.
template <typename T, typename ChunkFn>
T parallel_chunked_sum(std::uint64_t total, unsigned width, ChunkFn&& per_chunk) {
    const std::uint64_t n_chunks = 128;
    std::uint64_t chunk = (total + n_chunks - 1) / n_chunks;
    if (chunk == 0) chunk = 1;
    std::vector<T> partial((total + chunk - 1) / chunk, T(0));
    if (width <= 1) {
        for (std::size_t i = 0; i < partial.size(); ++i) {
            std::uint64_t lo = i * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            partial[i] = per_chunk(lo, hi);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= partial.size()) return;
                std::uint64_t lo = i * chunk;
                std::uint64_t hi = std::min(total, lo + chunk);
                partial[i] = per_chunk(lo, hi);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < width; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    T acc(0);
    for (const auto& v : partial) acc += v;
    return acc;
}

inline unsigned default_parallel_width() {
    if (const char* env = std::getenv("CY8_JOBS")) {
        int w = std::atoi(env);
        if (w >= 1) return static_cast<unsigned>(w);
    }
    return 1;
}

}  // namespace cy8
