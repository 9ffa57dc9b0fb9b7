#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace taumix {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks,
// one per worker. Chunk boundaries depend only on (n, threads), so any
// per-chunk partial results can be merged in chunk order deterministically.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    std::size_t nchunks = std::min<std::size_t>(std::size_t(threads), std::max<std::size_t>(n, 1));
    if (nchunks <= 1) {
        fn(std::size_t(0), std::size_t(0), n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::size_t base = n / nchunks, extra = n % nchunks, lo = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t hi = lo + base + (c < extra ? 1 : 0);
        pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

}  // namespace taumix
