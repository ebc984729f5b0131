#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace goldbach_lab {

/// Runs fn(block) for every block in [0, num_blocks) on up to `workers` threads.
/// Blocks are claimed dynamically. The first exception thrown by any block is
/// rethrown after all threads join.
template <class Fn>
void parallel_for_blocks(unsigned workers, std::uint64_t num_blocks, Fn&& fn) {
    if (num_blocks == 0) return;
    const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), num_blocks));
    if (threads == 1) {
        for (std::uint64_t b = 0; b < num_blocks; ++b) fn(b);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= num_blocks) return;
            try {
                fn(b);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed = true;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace goldbach_lab
