#pragma once

// Deterministic fork/join helper: static contiguous partition of an index
// range across threads.  Callers write to disjoint output slots, so the
// result is identical for any worker count -- the whole point, since trace
// files must be byte-identical under 1 or k workers.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace evosr {

inline int default_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, int workers, Fn&& fn) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    const std::size_t nw =
        std::min<std::size_t>(count, workers <= 1 ? 1 : static_cast<std::size_t>(workers));
    if (nw <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    // Static partition: worker w gets a contiguous chunk, chunk bounds depend
    // only on (count, nw), never on timing.
    std::vector<std::thread> pool;
    pool.reserve(nw);
    const std::size_t base = count / nw, extra = count % nw;
    std::size_t lo = begin;
    for (std::size_t w = 0; w < nw; ++w) {
        const std::size_t len = base + (w < extra ? 1 : 0);
        const std::size_t hi = lo + len;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

}  // namespace evosr
