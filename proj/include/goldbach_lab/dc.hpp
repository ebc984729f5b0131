#pragma once

// Degree of complexity DC(A): the least number of primes (repetition allowed)
// whose sum is A.
//
// dc_min() follows a fixed search strategy and always returns a witness.
// dc_oracle() answers the same question by breadth-first dynamic programming
// over every target up to A and shares none of dc_min's logic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goldbach_lab/error.hpp"
#include "goldbach_lab/primes.hpp"

namespace goldbach_lab {

struct DcLimits {
    std::uint64_t oracle_cap = 1'000'000;
    std::uint64_t enumeration_cap = 10'000;
    std::uint64_t pair_listing_cap = 1'000'000;
    std::uint64_t pair_counting_cap = 100'000'000;
};

struct DcResult {
    std::uint64_t target = 0;
    unsigned value = 0;
    std::vector<std::uint64_t> witness;  // non-decreasing

    friend bool operator==(const DcResult&, const DcResult&) = default;
};

/// Witness re-check: every summand prime, size == value, exact sum (no overflow).
inline bool verify_witness(const DcResult& r) {
    if (r.witness.size() != r.value || r.value == 0) return false;
    std::uint64_t sum = 0;
    for (auto p : r.witness) {
        if (!is_prime(p)) return false;
        if (sum > r.target || r.target - sum < p) return false;
        sum += p;
    }
    return sum == r.target;
}

/// Smallest prime p <= a/2 with a - p prime, scanning p upward.
/// `test` decides primality of a - p; callers may plug in a sieve lookup.
template <class PrimalityTest>
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_goldbach_pair(std::uint64_t a, PrimalityTest&& test) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> found;
    for_each_prime_up_to(a / 2, [&](std::uint64_t p) {
        if (test(a - p)) {
            found.emplace(p, a - p);
            return false;
        }
        return true;
    });
    return found;
}

inline DcResult dc_min(std::uint64_t target) {
    if (target < 2) throw Error(Errc::TargetTooSmall, "DC is defined for targets >= 2, got " + std::to_string(target));
    if (is_prime(target)) return {target, 1, {target}};

    auto test = [](std::uint64_t n) { return is_prime(n); };
    if (target % 2 == 0) {
        const auto pair = find_goldbach_pair(target, test);
        if (!pair) throw GoldbachCounterexample(target);
        return {target, 2, {pair->first, pair->second}};
    }
    if (is_prime(target - 2)) return {target, 2, {2, target - 2}};

    // Odd composite with target - 2 composite: 3 plus a pair for target - 3.
    const auto pair = find_goldbach_pair(target - 3, test);
    if (!pair) {
        throw GoldbachCounterexample(target - 3, " (needed for the 3-prime witness of " + std::to_string(target) + ")");
    }
    std::vector<std::uint64_t> witness{3, pair->first, pair->second};
    std::sort(witness.begin(), witness.end());
    return {target, 3, std::move(witness)};
}

/// Minimum prime-summand counts for every target in [0, limit], built once
/// and read-only afterwards; safe to share between threads.
class DcOracleTable {
public:
    explicit DcOracleTable(std::uint64_t limit, const DcLimits& limits = {}) : limit_(limit) {
        if (limit < 2) throw Error(Errc::TargetTooSmall, "oracle table limit must be >= 2");
        if (limit > limits.oracle_cap) {
            throw Error(Errc::AboveOracleCap,
                        std::to_string(limit) + " > oracle cap " + std::to_string(limits.oracle_cap));
        }
        build();
    }

    std::uint64_t limit() const noexcept { return limit_; }

    unsigned value(std::uint64_t target) const {
        if (target < 2) throw Error(Errc::TargetTooSmall, "oracle target must be >= 2");
        if (target > limit_) throw Error(Errc::AboveOracleCap, "target beyond table limit");
        return best_[target];
    }

private:
    using Bits = std::vector<std::uint64_t>;

    // dst |= src << shift, restricted to src words [lo_word, hi_word].
    static void or_shifted(Bits& dst, const Bits& src, std::uint64_t shift, std::size_t lo_word, std::size_t hi_word) {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        const std::size_t n = dst.size();
        for (std::size_t i = lo_word; i <= hi_word && i + ws < n; ++i) {
            const std::uint64_t w = src[i];
            if (!w) continue;
            dst[i + ws] |= w << bs;
            if (bs && i + ws + 1 < n) dst[i + ws + 1] |= w >> (64 - bs);
        }
    }

    void build() {
        const std::size_t words = static_cast<std::size_t>(limit_ / 64 + 1);
        const auto bit = [](const Bits& b, std::uint64_t i) { return (b[i / 64] >> (i % 64)) & 1; };

        // Coins come from a plain Eratosthenes table, not the segmented sieve.
        std::vector<bool> composite(limit_ + 1, false);
        std::vector<std::uint64_t> coins;
        for (std::uint64_t i = 2; i <= limit_; ++i) {
            if (composite[i]) continue;
            coins.push_back(i);
            for (std::uint64_t j = i * i; j <= limit_; j += i) composite[j] = true;
        }

        best_.assign(limit_ + 1, 0);
        Bits assigned(words, 0);
        Bits frontier(words, 0);
        frontier[0] = 1;  // sum 0 with zero coins
        assigned[0] = 1;
        std::uint64_t remaining = limit_ - 1;  // targets 2..limit; 1 is never reachable

        for (unsigned layer = 1; remaining > 0; ++layer) {
            std::size_t lo = words, hi = 0;
            for (std::size_t i = 0; i < words; ++i) {
                if (frontier[i]) {
                    lo = std::min(lo, i);
                    hi = i;
                }
            }
            if (lo == words) break;

            Bits next(words, 0);
            for (auto c : coins) or_shifted(next, frontier, c, lo, hi);
            if (limit_ % 64 != 63) next.back() &= (std::uint64_t{1} << (limit_ % 64 + 1)) - 1;
            for (std::size_t i = 0; i < words; ++i) next[i] &= ~assigned[i];
            for (std::size_t i = 0; i < words; ++i) {
                std::uint64_t w = next[i];
                assigned[i] |= w;
                while (w) {
                    const auto b = static_cast<std::uint64_t>(std::countr_zero(w));
                    w &= w - 1;
                    best_[i * 64 + b] = layer;
                    --remaining;
                }
            }
            frontier = std::move(next);
        }
        for (std::uint64_t t = 2; t <= limit_; ++t) {
            if (!bit(assigned, t)) throw Error(Errc::OutOfBounds, "oracle left target unassigned");
        }
    }

    std::uint64_t limit_;
    std::vector<unsigned> best_;
};

inline unsigned dc_oracle(std::uint64_t target, const DcLimits& limits = {}) {
    if (target < 2) throw Error(Errc::TargetTooSmall, "oracle target must be >= 2");
    if (target > limits.oracle_cap) {
        throw Error(Errc::AboveOracleCap, std::to_string(target) + " > oracle cap " + std::to_string(limits.oracle_cap));
    }
    return DcOracleTable(target, limits).value(target);
}

/// Every multiset of exactly k primes summing to target, each in non-decreasing
/// order, listed lexicographically.
inline std::vector<std::vector<std::uint64_t>> decompositions(std::uint64_t target, std::uint64_t k,
                                                              const DcLimits& limits = {}) {
    if (target < 2) throw Error(Errc::TargetTooSmall, "decomposition target must be >= 2");
    if (target > limits.enumeration_cap) {
        throw Error(Errc::AboveEnumerationCap,
                    std::to_string(target) + " > enumeration cap " + std::to_string(limits.enumeration_cap));
    }
    if (k == 0) throw Error(Errc::InvalidArgument, "summand count must be >= 1");

    std::vector<std::vector<std::uint64_t>> out;
    if (k > target / 2) return out;  // k primes sum to at least 2k

    const auto seg = sieve_segment(1, target);
    const auto primes = seg.primes();
    std::vector<std::uint64_t> current;
    current.reserve(k);

    auto recurse = [&](auto&& self, std::size_t start, std::uint64_t rest, std::uint64_t slots) -> void {
        if (slots == 1) {
            if (rest >= (current.empty() ? 2 : current.back()) && seg.contains(rest) && seg.is_prime_in_range(rest)) {
                current.push_back(rest);
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (std::size_t i = start; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (p * slots > rest) break;
            current.push_back(p);
            self(self, i, rest - p, slots - 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0, target, k);
    return out;
}

namespace detail {
inline void check_even_target(std::uint64_t target, std::uint64_t cap, const char* what) {
    if (target % 2 != 0) throw Error(Errc::NotEven, std::to_string(target) + " is odd");
    if (target < 4) throw Error(Errc::TargetTooSmall, "Goldbach targets start at 4");
    if (target > cap) {
        throw Error(Errc::AboveEnumerationCap,
                    std::to_string(target) + " > " + what + " cap " + std::to_string(cap));
    }
}
}  // namespace detail

/// All unordered prime pairs (p, q), p <= q, p + q = target, ascending in p.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_pairs(std::uint64_t target,
                                                                         const DcLimits& limits = {}) {
    detail::check_even_target(target, limits.pair_listing_cap, "pair listing");
    const auto seg = sieve_segment(1, target);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    seg.for_each_prime([&](std::uint64_t p) {
        if (p <= target / 2 && seg.is_prime_in_range(target - p)) out.emplace_back(p, target - p);
    });
    return out;
}

inline std::uint64_t goldbach_pair_count(std::uint64_t target, const DcLimits& limits = {}) {
    detail::check_even_target(target, limits.pair_counting_cap, "pair counting");
    const auto seg = sieve_segment(1, target, std::max<std::size_t>(kDefaultSegmentCap, target));
    std::uint64_t count = 0;
    seg.for_each_prime([&](std::uint64_t p) {
        if (p <= target / 2 && seg.is_prime_in_range(target - p)) ++count;
    });
    return count;
}

}  // namespace goldbach_lab
