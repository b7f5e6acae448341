#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace hdx {

/// Contiguous block partition of [0, total). Results must be merged in block
/// order by the caller; every reduction in this codebase is either exact
/// (rationals) or order-independent (float min), so the outcome does not
/// depend on the worker count.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_blocks(std::uint64_t total,
                                                                         int threads) {
    if (threads < 1) threads = 1;
    const std::uint64_t nb = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                     total ? total : 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
    const std::uint64_t base = total / nb, rem = total % nb;
    std::uint64_t at = 0;
    for (std::uint64_t b = 0; b < nb; ++b) {
        const std::uint64_t len = base + (b < rem ? 1 : 0);
        blocks.emplace_back(at, at + len);
        at += len;
    }
    return blocks;
}

/// Runs fn(block_index) on each block, in parallel when threads > 1.
inline void run_blocks(std::size_t nblocks, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || nblocks <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) pool.emplace_back(fn, b);
    for (auto& t : pool) t.join();
}

}  // namespace hdx
