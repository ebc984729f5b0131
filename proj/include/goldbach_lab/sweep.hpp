#pragma once

// Bounded Goldbach sweep: checks that every even A in [from, to] has a prime
// pair, with block-parallel workers and resumable checkpoints.
//
// The even interval is cut into contiguous blocks of `block_evens` values.
// Workers claim blocks in index order; one coordinator commits finished blocks
// strictly in index order, so the committed prefix (and the checkpoint written
// from it) never depends on the number of workers or their timing.

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "goldbach_lab/checkpoint.hpp"
#include "goldbach_lab/dc.hpp"
#include "goldbach_lab/error.hpp"
#include "goldbach_lab/primes.hpp"

namespace goldbach_lab {

struct SweepConfig {
    std::uint64_t from = 4;
    std::uint64_t to = 4;
    unsigned workers = 1;
    std::optional<std::filesystem::path> checkpoint;
    std::uint64_t checkpoint_stride = std::uint64_t{1} << 20;  // evens between checkpoint writes
    std::uint64_t block_evens = std::uint64_t{1} << 16;
    /// Called by the coordinator after each committed block with the new last_verified.
    std::function<void(std::uint64_t)> on_commit;
};

/// The deterministic part of a sweep result; identical for resumed and uninterrupted runs.
struct SweepSummary {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::uint64_t verified = 0;
    std::vector<std::uint64_t> failures;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepRun {
    SweepSummary summary;
    double wall_seconds = 0.0;
    std::optional<std::uint64_t> resumed_after;  // last_verified read from the checkpoint
};

inline constexpr std::uint64_t kSweepSieveWindow = std::uint64_t{1} << 16;

/// Evens in [first, last] (both even) with no prime pair. One sieved segment
/// covers [first - window, last]; values below the window fall back to is_prime.
inline std::vector<std::uint64_t> verify_even_block(std::uint64_t first, std::uint64_t last) {
    const std::uint64_t lo = first > kSweepSieveWindow ? first - kSweepSieveWindow : 1;
    const auto seg = sieve_segment(lo, last, std::max<std::size_t>(kDefaultSegmentCap, last - lo + 1));
    auto test = [&](std::uint64_t n) { return seg.contains(n) ? seg.is_prime_in_range(n) : is_prime(n); };

    std::vector<std::uint64_t> failures;
    for (std::uint64_t a = first;; a += 2) {
        if (!find_goldbach_pair(a, test)) failures.push_back(a);
        if (last - a < 2) break;
    }
    return failures;
}

namespace detail {

inline void check_sweep_config(const SweepConfig& c) {
    if (c.from % 2 || c.to % 2) throw Error(Errc::NotEven, "sweep bounds must be even");
    if (c.from < 4 || c.from > c.to) {
        throw Error(Errc::InvalidInterval,
                    "sweep needs 4 <= from <= to, got [" + std::to_string(c.from) + ", " + std::to_string(c.to) + "]");
    }
    if (c.workers == 0) throw Error(Errc::InvalidArgument, "workers must be >= 1");
    if (c.block_evens == 0) throw Error(Errc::InvalidArgument, "block size must be >= 1");
    if (c.checkpoint_stride == 0) throw Error(Errc::InvalidArgument, "checkpoint stride must be >= 1");
}

}  // namespace detail

inline SweepRun run_sweep(const SweepConfig& config) {
    detail::check_sweep_config(config);
    const auto t0 = std::chrono::steady_clock::now();

    SweepRun run;
    run.summary.from = config.from;
    run.summary.to = config.to;

    SweepCheckpoint cp;
    cp.from = config.from;
    cp.to = config.to;
    cp.started_at = utc_timestamp();
    std::uint64_t start = config.from;
    bool done = false;

    if (config.checkpoint) {
        if (auto existing = load_checkpoint(*config.checkpoint)) {
            if (existing->from != config.from || existing->to != config.to) {
                throw Error(Errc::CheckpointMismatch,
                            "checkpoint covers [" + std::to_string(existing->from) + ", " +
                                std::to_string(existing->to) + "], requested [" + std::to_string(config.from) + ", " +
                                std::to_string(config.to) + "]");
            }
            cp = *existing;
            run.resumed_after = cp.last_verified;
            done = cp.last_verified == config.to;
            start = cp.last_verified + 2;
        }
    }

    std::vector<std::uint64_t> failures = cp.failures;
    std::uint64_t last_verified = run.resumed_after.value_or(config.from - 2);
    std::uint64_t last_saved = last_verified;

    auto save = [&] {
        if (!config.checkpoint) return;
        cp.last_verified = last_verified;
        cp.failures = failures;
        cp.updated_at = utc_timestamp();
        save_checkpoint(*config.checkpoint, cp);
        last_saved = last_verified;
    };

    if (!done) {
        const std::uint64_t evens = (config.to - start) / 2 + 1;
        const std::uint64_t blocks = (evens + config.block_evens - 1) / config.block_evens;
        const auto block_first = [&](std::uint64_t b) { return start + 2 * b * config.block_evens; };
        const auto block_last = [&](std::uint64_t b) {
            const std::uint64_t remaining = (config.to - block_first(b)) / 2;
            return block_first(b) + 2 * std::min(remaining, config.block_evens - 1);
        };

        const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, blocks));
        const std::uint64_t max_in_flight = 4 * static_cast<std::uint64_t>(threads);

        std::mutex mu;
        std::condition_variable cv;
        std::uint64_t next_block = 0;
        std::uint64_t committed = 0;
        bool stopping = false;
        std::exception_ptr worker_error;
        std::map<std::uint64_t, std::vector<std::uint64_t>> finished;

        auto worker = [&] {
            for (;;) {
                std::uint64_t b;
                {
                    std::unique_lock lock(mu);
                    cv.wait(lock, [&] { return stopping || next_block >= blocks || next_block < committed + max_in_flight; });
                    if (stopping || next_block >= blocks) return;
                    b = next_block++;
                }
                try {
                    auto result = verify_even_block(block_first(b), block_last(b));
                    std::lock_guard lock(mu);
                    finished.emplace(b, std::move(result));
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!worker_error) worker_error = std::current_exception();
                    stopping = true;
                }
                cv.notify_all();
            }
        };

        std::vector<std::jthread> pool;
        auto stop_pool = [&] {
            {
                std::lock_guard lock(mu);
                stopping = true;
            }
            cv.notify_all();
            pool.clear();
        };

        try {
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            while (committed < blocks) {
                std::vector<std::uint64_t> block_failures;
                {
                    std::unique_lock lock(mu);
                    cv.wait(lock, [&] { return worker_error || finished.count(committed); });
                    if (worker_error) std::rethrow_exception(worker_error);
                    auto node = finished.extract(committed);
                    block_failures = std::move(node.mapped());
                }
                failures.insert(failures.end(), block_failures.begin(), block_failures.end());
                last_verified = block_last(committed);
                {
                    std::lock_guard lock(mu);
                    ++committed;
                }
                cv.notify_all();
                if (config.checkpoint && (last_verified - last_saved) / 2 >= config.checkpoint_stride) save();
                if (config.on_commit) config.on_commit(last_verified);
            }
        } catch (...) {
            stop_pool();
            throw;
        }
        stop_pool();
        if (config.checkpoint && last_saved != last_verified) save();
    }

    std::sort(failures.begin(), failures.end());
    run.summary.failures = std::move(failures);
    run.summary.verified = (config.to - config.from) / 2 + 1;
    run.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

}  // namespace goldbach_lab
